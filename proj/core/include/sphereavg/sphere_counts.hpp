#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sphereavg/int128.hpp"

namespace sphereavg {

// Exact representation counts r_n(lambda) = #{x in Z^n : x_1^2+...+x_n^2 = lambda}
// for 0 <= lambda <= max_lambda. Immutable after construction and safe to
// share across concurrent readers.
struct RepCountTable {
  int dimension = 0;
  int64_t max_lambda = -1;
  std::vector<uint128> counts;

  uint128 count(int64_t lambda) const {
    if (lambda < 0 || lambda > max_lambda)
      throw std::out_of_range("RepCountTable::count: lambda out of range");
    return counts[static_cast<size_t>(lambda)];
  }
};

// Full table via the n-fold truncated power of the theta sequence
// t[0]=1, t[k^2]=2. Each multiplication is truncated at max_lambda, so the
// work is O(n * Lambda * sqrt(Lambda)) on the ~sqrt(Lambda) nonzero theta
// terms. Exact; throws CapacityError if a count would overflow 128 bits.
RepCountTable rep_count_table(int n, int64_t max_lambda);

// Single count via meet-in-the-middle: the coordinates are split into two
// halves, each half's multiset of partial sums is a half-dimensional count
// table, and the halves are joined by one convolution at lambda. Intended
// for isolated large lambda without building a full n-dimensional table.
uint128 rep_count_single(int n, int64_t lambda);

// Jacobi's divisor formula r_4(lambda) = 8 * sum of divisors d of lambda
// with 4 not dividing d. Independent oracle for the n=4 column of the
// counting routines.
uint128 jacobi_four_square(int64_t lambda);

struct LatticePoint {
  std::vector<int64_t> coordinates;
  bool operator==(const LatticePoint&) const = default;
};

// All r_n(lambda) points with |x|^2 = lambda, in lexicographic coordinate
// order (deterministic, suitable for golden files). Recursive enumeration
// with the largest remaining coordinate bounded by sqrt(remaining).
// Throws BudgetError if the point count exceeds budget().max_sphere_points.
std::vector<LatticePoint> enumerate_sphere(int n, int64_t lambda);

struct RatioStats {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  int64_t argmin = 0;
  int64_t argmax = 0;
};

// Extremes of r(lambda) / lambda^(n/2-1) over lambda_min <= lambda <= max_lambda,
// i.e. empirical candidates for the constants bracketing r(lambda) when n >= 5.
RatioStats asymptotic_ratio_stats(const RepCountTable& table, int64_t lambda_min);

// Lazy per-dimension count cache; grows by rebuilding the table at twice the
// requested lambda, so the total work is within a constant of the final size.
class CountCache {
 public:
  explicit CountCache(int n) : n_(n) {}

  uint128 count(int64_t lambda);
  const RepCountTable& table() const { return table_; }

 private:
  int n_;
  RepCountTable table_;
};

// Binary cache file: magic "RNSQ", version u32=1, n u32, Lambda u64, then
// (Lambda+1) little-endian u64 counts. A count exceeding u64 aborts writing.
void write_count_cache(const RepCountTable& table, const std::filesystem::path& path);
RepCountTable read_count_cache(const std::filesystem::path& path);

}  // namespace sphereavg

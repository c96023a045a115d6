#include "sphereavg/sphere_counts.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>

#include "sphereavg/budget.hpp"
#include "sphereavg/errors.hpp"

namespace sphereavg {

namespace {

// (2*floor(sqrt(L))+1)^n if it fits 126 bits, else nullopt. Every partial sum
// in the truncated theta-power multiplication is bounded by the final count,
// which is at most this ball count, so when the bound fits we can skip
// per-addition overflow checks.
std::optional<uint128> ball_count_bound(int n, int64_t max_lambda) {
  uint128 side = static_cast<uint128>(2 * isqrt_floor(max_lambda) + 1);
  uint128 acc = 1;
  const uint128 cap = static_cast<uint128>(1) << 126;
  for (int i = 0; i < n; ++i) {
    if (acc > cap / side) return std::nullopt;
    acc *= side;
  }
  return acc;
}

void multiply_by_theta(std::vector<uint128>& cur, int64_t max_lambda,
                       bool checked, int n_for_error) {
  std::vector<uint128> next = cur;  // k = 0 term
  const int64_t root = isqrt_floor(max_lambda);
  if (!checked) {
    for (int64_t k = 1; k <= root; ++k) {
      const int64_t kk = k * k;
      const uint128* src = cur.data();
      uint128* dst = next.data() + kk;
      const int64_t len = max_lambda - kk + 1;
      for (int64_t i = 0; i < len; ++i) dst[i] += src[i] + src[i];
    }
  } else {
    for (int64_t k = 1; k <= root; ++k) {
      const int64_t kk = k * k;
      for (int64_t lam = kk; lam <= max_lambda; ++lam) {
        uint128 term = cur[static_cast<size_t>(lam - kk)];
        uint128 twice;
        if (__builtin_add_overflow(term, term, &twice) ||
            __builtin_add_overflow(next[static_cast<size_t>(lam)], twice,
                                   &next[static_cast<size_t>(lam)])) {
          throw CapacityError("rep_count_table: count overflow at lambda=" +
                              std::to_string(lam) + ", n=" +
                              std::to_string(n_for_error));
        }
      }
    }
  }
  cur.swap(next);
}

}  // namespace

RepCountTable rep_count_table(int n, int64_t max_lambda) {
  if (n < 1) throw std::invalid_argument("rep_count_table: dimension must be >= 1");
  if (max_lambda < 0)
    throw std::invalid_argument("rep_count_table: max_lambda must be >= 0");

  RepCountTable table;
  table.dimension = n;
  table.max_lambda = max_lambda;
  table.counts.assign(static_cast<size_t>(max_lambda) + 1, 0);
  table.counts[0] = 1;
  for (int64_t k = 1; k * k <= max_lambda; ++k)
    table.counts[static_cast<size_t>(k * k)] = 2;

  const bool checked = !ball_count_bound(n, max_lambda).has_value();
  for (int dim = 2; dim <= n; ++dim)
    multiply_by_theta(table.counts, max_lambda, checked, n);
  return table;
}

uint128 rep_count_single(int n, int64_t lambda) {
  if (n < 1) throw std::invalid_argument("rep_count_single: dimension must be >= 1");
  if (lambda < 0)
    throw std::invalid_argument("rep_count_single: lambda must be >= 0");
  if (n == 1) {
    if (lambda == 0) return 1;
    return is_perfect_square(lambda) ? 2 : 0;
  }
  const int n_low = n / 2;
  const int n_high = n - n_low;
  const RepCountTable low = rep_count_table(n_low, lambda);
  const RepCountTable high =
      n_high == n_low ? low : rep_count_table(n_high, lambda);
  uint128 total = 0;
  for (int64_t s = 0; s <= lambda; ++s) {
    uint128 product = checked_mul(low.counts[static_cast<size_t>(s)],
                                  high.counts[static_cast<size_t>(lambda - s)]);
    total = checked_add(total, product);
  }
  return total;
}

uint128 jacobi_four_square(int64_t lambda) {
  if (lambda < 1)
    throw std::invalid_argument("jacobi_four_square: lambda must be >= 1");
  uint128 divisor_sum = 0;
  for (int64_t d = 1; d * d <= lambda; ++d) {
    if (lambda % d != 0) continue;
    if (d % 4 != 0) divisor_sum += static_cast<uint128>(d);
    const int64_t e = lambda / d;
    if (e != d && e % 4 != 0) divisor_sum += static_cast<uint128>(e);
  }
  return checked_mul(divisor_sum, static_cast<uint128>(8));
}

namespace {

void enumerate_rec(int remaining_dims, int64_t remaining, LatticePoint& point,
                   std::vector<LatticePoint>& out, int64_t limit) {
  if (remaining_dims == 0) {
    if (remaining == 0) {
      if (static_cast<int64_t>(out.size()) >= limit)
        throw BudgetError("enumerate_sphere: point count exceeds budget");
      out.push_back(point);
    }
    return;
  }
  if (remaining_dims == 1) {
    // Leaf: remaining must itself be a square.
    const int64_t r = isqrt_floor(remaining);
    if (r * r != remaining) return;
    if (r == 0) {
      point.coordinates.push_back(0);
      enumerate_rec(0, 0, point, out, limit);
      point.coordinates.pop_back();
      return;
    }
    for (int64_t x : {-r, r}) {
      point.coordinates.push_back(x);
      enumerate_rec(0, 0, point, out, limit);
      point.coordinates.pop_back();
    }
    return;
  }
  const int64_t root = isqrt_floor(remaining);
  for (int64_t x = -root; x <= root; ++x) {
    point.coordinates.push_back(x);
    enumerate_rec(remaining_dims - 1, remaining - x * x, point, out, limit);
    point.coordinates.pop_back();
  }
}

}  // namespace

std::vector<LatticePoint> enumerate_sphere(int n, int64_t lambda) {
  if (n < 1) throw std::invalid_argument("enumerate_sphere: dimension must be >= 1");
  if (lambda < 0)
    throw std::invalid_argument("enumerate_sphere: lambda must be >= 0");
  std::vector<LatticePoint> out;
  LatticePoint scratch;
  scratch.coordinates.reserve(static_cast<size_t>(n));
  enumerate_rec(n, lambda, scratch, out, budget().max_sphere_points);
  return out;
}

RatioStats asymptotic_ratio_stats(const RepCountTable& table, int64_t lambda_min) {
  if (lambda_min < 1)
    throw std::invalid_argument("asymptotic_ratio_stats: lambda_min must be >= 1");
  if (table.max_lambda < lambda_min)
    throw std::invalid_argument("asymptotic_ratio_stats: empty lambda range");
  const double exponent = table.dimension / 2.0 - 1.0;
  RatioStats stats;
  bool first = true;
  for (int64_t lam = lambda_min; lam <= table.max_lambda; ++lam) {
    const double ratio = static_cast<double>(table.counts[static_cast<size_t>(lam)]) /
                         std::pow(static_cast<double>(lam), exponent);
    if (first || ratio < stats.min_ratio) {
      stats.min_ratio = ratio;
      stats.argmin = lam;
    }
    if (first || ratio > stats.max_ratio) {
      stats.max_ratio = ratio;
      stats.argmax = lam;
    }
    first = false;
  }
  return stats;
}

uint128 CountCache::count(int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("CountCache: lambda must be >= 0");
  if (lambda > table_.max_lambda) {
    const int64_t target = std::max<int64_t>({lambda, 2 * table_.max_lambda, 64});
    table_ = rep_count_table(n_, target);
  }
  return table_.counts[static_cast<size_t>(lambda)];
}

namespace {

template <typename T>
void write_le(std::ofstream& out, T value) {
  unsigned char bytes[sizeof(T)];
  for (size_t i = 0; i < sizeof(T); ++i)
    bytes[i] = static_cast<unsigned char>((value >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T read_le(std::ifstream& in) {
  unsigned char bytes[sizeof(T)];
  in.read(reinterpret_cast<char*>(bytes), sizeof(T));
  if (!in) throw std::runtime_error("count cache: truncated file");
  T value = 0;
  for (size_t i = 0; i < sizeof(T); ++i)
    value |= static_cast<T>(bytes[i]) << (8 * i);
  return value;
}

constexpr char kCacheMagic[4] = {'R', 'N', 'S', 'Q'};
constexpr uint32_t kCacheVersion = 1;

}  // namespace

void write_count_cache(const RepCountTable& table, const std::filesystem::path& path) {
  for (int64_t lam = 0; lam <= table.max_lambda; ++lam) {
    if (table.counts[static_cast<size_t>(lam)] >
        static_cast<uint128>(std::numeric_limits<uint64_t>::max()))
      throw CapacityError("count cache: count at lambda=" + std::to_string(lam) +
                          " exceeds u64");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("count cache: cannot open " + path.string());
  out.write(kCacheMagic, 4);
  write_le<uint32_t>(out, kCacheVersion);
  write_le<uint32_t>(out, static_cast<uint32_t>(table.dimension));
  write_le<uint64_t>(out, static_cast<uint64_t>(table.max_lambda));
  for (int64_t lam = 0; lam <= table.max_lambda; ++lam)
    write_le<uint64_t>(out, static_cast<uint64_t>(table.counts[static_cast<size_t>(lam)]));
  if (!out) throw std::runtime_error("count cache: write failed for " + path.string());
}

RepCountTable read_count_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("count cache: cannot open " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0)
    throw std::runtime_error("count cache: bad magic in " + path.string());
  if (read_le<uint32_t>(in) != kCacheVersion)
    throw std::runtime_error("count cache: unsupported version in " + path.string());
  RepCountTable table;
  table.dimension = static_cast<int>(read_le<uint32_t>(in));
  table.max_lambda = static_cast<int64_t>(read_le<uint64_t>(in));
  table.counts.resize(static_cast<size_t>(table.max_lambda) + 1);
  for (int64_t lam = 0; lam <= table.max_lambda; ++lam)
    table.counts[static_cast<size_t>(lam)] = read_le<uint64_t>(in);
  return table;
}

}  // namespace sphereavg

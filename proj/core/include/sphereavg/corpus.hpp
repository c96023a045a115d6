#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphereavg/grid_function.hpp"

namespace sphereavg {

// 64-bit linear congruential generator with fixed, documented constants
// (multiplier 6364136223846793005, increment 1442695040888963407) so every
// port of the experiment harness reproduces corpora bit-exactly.
class Lcg64 {
 public:
  explicit Lcg64(uint64_t seed)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 33;
  }

  // Uniform in [lo, hi] (inclusive); hi - lo must be small, the modulo bias
  // at 31 output bits is irrelevant for single-digit ranges.
  int64_t uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

// Integer-valued function on [-half_width, half_width] with values drawn
// uniformly from [value_lo, value_hi].
GridFunction<Rat> random_integer_function(Lcg64& rng, int64_t half_width,
                                          int64_t value_lo, int64_t value_hi);

// +/-1 valued function on [-half_width, half_width].
GridFunction<Rat> random_sign_function(uint64_t seed, int64_t half_width);

struct NamedGridFunction {
  std::string label;
  GridFunction<Rat> fn;
};

struct CorpusOptions {
  uint64_t seed = 1;
  std::vector<int64_t> indicator_half_widths = {16};  // chi_M = 1 on [-2M, 2M]
  int random_count = 5;
  int64_t random_half_width = 3;
  int64_t value_lo = -3;
  int64_t value_hi = 3;
};

// Deterministic test-function corpus: delta, the chi_M indicators, then
// random_count seeded random integer functions labeled rand_a, rand_b, ...
std::vector<NamedGridFunction> build_corpus(const CorpusOptions& options = {});

}  // namespace sphereavg

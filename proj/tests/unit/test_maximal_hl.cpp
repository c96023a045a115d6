#include <doctest.h>

#include <vector>

#include "sphereavg/corpus.hpp"
#include "sphereavg/maximal_hl.hpp"

using namespace sphereavg;

namespace {

// Naive reference: direct double loop over window sizes, no prefix sums.
Rat naive_hl_at(const GridFunction<Rat>& f, int64_t y, int64_t n_limit) {
  Rat best(0);
  for (int64_t n = 1; n <= n_limit; ++n) {
    Rat sum(0);
    for (int64_t x = -n; x <= n; ++x) sum += f.at(y - x);
    best = std::max(best, abs(sum) / Rat(n));
  }
  return best;
}

}  // namespace

TEST_CASE("maximal function of the unit mass is 1/|y|") {
  const auto delta = GridFunction<Rat>::delta();
  const auto mf = hl_maximal(delta, Window{-100, 100});
  CHECK(mf.at(0) == Rat(1));
  for (int64_t y = 1; y <= 100; ++y) {
    CHECK(mf.at(y) == Rat::fraction(1, y));
    CHECK(mf.at(-y) == Rat::fraction(1, y));
  }
}

TEST_CASE("maximal function pinned values and the zero function") {
  for (int64_t k : {1, 5, 20}) {
    const auto plateau = GridFunction<Rat>::indicator(k);
    const auto mf = hl_maximal(plateau, Window{0, 0});
    CHECK(mf.at(0) == Rat(3));  // N = 1 window holds 3 points, normalized by 1
  }
  CHECK(hl_maximal(GridFunction<Rat>{}, Window{-5, 5}).is_zero());
}

TEST_CASE("maximal function matches the naive reference with a wide N search") {
  Lcg64 rng(61);
  for (int trial = 0; trial < 4; ++trial) {
    const auto f = random_integer_function(rng, 4, -4, 4);
    if (f.is_zero()) continue;
    const auto mf = hl_maximal(f, Window{-12, 12});
    for (int64_t y = -12; y <= 12; ++y) {
      // 200 extra window sizes beyond the documented bound change nothing.
      const int64_t n_limit =
          std::max<int64_t>({f.hi() - y, y - f.lo(), 1}) + 200;
      CHECK(mf.at(y) == naive_hl_at(f, y, n_limit));
    }
  }
}

TEST_CASE("maximal operator properties") {
  Lcg64 rng(67);
  const auto f = random_integer_function(rng, 5, 0, 3);
  const auto g = random_integer_function(rng, 5, 0, 3);
  const Window window{-15, 15};
  const auto mf = hl_maximal(f, window);
  const auto mg = hl_maximal(g, window);

  // Nonnegativity and absolute homogeneity.
  for (const Rat& v : mf.values) CHECK(v >= Rat(0));
  auto scaled = f;
  for (Rat& v : scaled.values) v = v * Rat(-4);
  const auto mscaled = hl_maximal(scaled, window);
  for (int64_t y = window.lo; y <= window.hi; ++y)
    CHECK(mscaled.at(y) == Rat(4) * mf.at(y));

  // Translation equivariance.
  auto moved = f;
  moved.offset += 9;
  const auto mmoved = hl_maximal(moved, Window{window.lo + 9, window.hi + 9});
  for (int64_t y = window.lo; y <= window.hi; ++y)
    CHECK(mmoved.at(y + 9) == mf.at(y));

  // Sublinearity on nonnegative inputs.
  GridFunction<Rat> sum;
  const int64_t lo = std::min(f.lo(), g.lo());
  const int64_t hi = std::max(f.hi(), g.hi());
  sum.offset = lo;
  for (int64_t x = lo; x <= hi; ++x) sum.values.push_back(f.at(x) + g.at(x));
  sum.trim();
  const auto msum = hl_maximal(sum, window);
  for (int64_t y = window.lo; y <= window.hi; ++y)
    CHECK(msum.at(y) <= mf.at(y) + mg.at(y));
}

TEST_CASE("lp norms") {
  const auto delta = GridFunction<Rat>::delta();
  for (double p : {1.0, 1.5, 2.0, 7.0})
    CHECK(lp_norm(delta, p).value == doctest::Approx(1.0));

  const auto chi = GridFunction<Rat>::indicator(2 * 16);
  CHECK(lp_norm(chi, 2.0).value == doctest::Approx(std::sqrt(65.0)));

  const auto two = GridFunction<Rat>::from_values(0, {Rat(1), Rat(2)});
  CHECK(lp_norm(two, 2.0).value == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(lp_norm(two, 0.5), std::invalid_argument);

  // Norm nesting: p >= p' implies ||f||_p <= ||f||_{p'}.
  Lcg64 rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_integer_function(rng, 6, -3, 3);
    double prev = lp_norm(f, 1.0).value;
    for (double p : {1.5, 2.0, 3.0, 6.0}) {
      const double cur = lp_norm(f, p).value;
      CHECK(cur <= prev * (1.0 + 1e-12));
      prev = cur;
    }
  }
}

TEST_CASE("hl norm ratios stay below the recorded baselines") {
  CorpusOptions options;
  options.indicator_half_widths = {4, 16};
  const auto corpus = build_corpus(options);
  for (double p : {1.5, 2.0, 3.0}) {
    for (const auto& [label, fn] : corpus) {
      if (fn.is_zero()) continue;
      const double ratio = hl_norm_upper(fn, p, 1000) / lp_norm(fn, p).value;
      CHECK(ratio < recorded_hl_ratio_bound(p));
    }
  }
}

TEST_CASE("l1 norm of M(delta) grows logarithmically, matching the p>1 cutoff") {
  const auto delta = GridFunction<Rat>::delta();
  const auto narrow = hl_maximal(delta, Window{-100, 100});
  const auto wide = hl_maximal(delta, Window{-1000, 1000});
  double narrow_sum = 0.0, wide_sum = 0.0;
  for (const Rat& v : narrow.values) narrow_sum += v.to_double();
  for (const Rat& v : wide.values) wide_sum += v.to_double();
  CHECK(wide_sum > narrow_sum + 4.0);  // ~ 2*ln(10) extra mass per decade
  const double growth = wide_sum / narrow_sum;
  const double expected = std::log(1000.0) / std::log(100.0);
  CHECK(std::abs(growth / expected - 1.0) < 0.10);
}

TEST_CASE("majorization closing step") {
  // Unit masses: A_*(y) = 1/r(5 y^2) and the majorant is |y|^{-5/2}.
  std::vector<GridFunction<Rat>> deltas(5, GridFunction<Rat>::delta());
  const auto report = majorization_check<Rat>(5, deltas, Window{1, 10});
  CHECK(report.max_violation <= 0.0);
  CHECK(report.max_ratio > 0.0);

  // All-zero inputs: both sides vanish.
  std::vector<GridFunction<Rat>> zeros(5);
  const auto zero_report = majorization_check<Rat>(5, zeros, Window{-3, 3});
  CHECK(zero_report.max_violation == 0.0);

  // Random nonnegative corpus.
  Lcg64 rng(73);
  std::vector<GridFunction<Rat>> fs;
  for (int i = 0; i < 5; ++i) fs.push_back(random_integer_function(rng, 4, 0, 3));
  const auto rand_report = majorization_check<Rat>(5, fs, Window{-8, 8});
  CHECK(rand_report.max_violation <= 0.0);

  CHECK_THROWS_AS(majorization_check<Rat>(4, std::vector<GridFunction<Rat>>(4),
                                          Window{0, 1}),
                  std::invalid_argument);
}

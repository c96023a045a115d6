#pragma once

#include <cmath>
#include <span>

#include "sphereavg/averages.hpp"
#include "sphereavg/exponential.hpp"
#include "sphereavg/grid_function.hpp"

namespace sphereavg {

// Mf(y) = sup_{N>=1} |N^{-1} sum_{|x|<=N} f(y-x)|, computed exactly on the
// requested window. Only N up to max(hi-y, y-lo, 1) matter: once the window
// covers the whole support the inner sum is the constant total T, and |T|/N
// only decreases, so the sup over the tail is |T|/max(hi-y, y-lo) -- that
// closed form is also the value of Mf outside any emitted window. Note the
// paper-faithful N^{-1} normalization over 2N+1 points, not (2N+1)^{-1}.
template <class S>
GridFunction<S> hl_maximal(const GridFunction<S>& f, Window window) {
  GridFunction<S> out;
  if (f.is_zero() || window.empty()) return out;

  // Prefix sums: prefix[j] = sum of the first j stored values.
  std::vector<S> prefix(f.values.size() + 1, S(0));
  for (size_t j = 0; j < f.values.size(); ++j)
    prefix[j + 1] = prefix[j] + f.values[j];
  const auto range_sum = [&](int64_t a, int64_t b) -> S {
    a = std::max(a, f.lo());
    b = std::min(b, f.hi());
    if (b < a) return S(0);
    return prefix[static_cast<size_t>(b - f.offset + 1)] -
           prefix[static_cast<size_t>(a - f.offset)];
  };

  out.offset = window.lo;
  out.values.assign(static_cast<size_t>(window.size()), S(0));
  for (int64_t y = window.lo; y <= window.hi; ++y) {
    const int64_t n_max =
        std::max<int64_t>({f.hi() - y, y - f.lo(), 1});
    S best(0);
    using std::abs;
    for (int64_t n = 1; n <= n_max; ++n) {
      const S windowed = abs(range_sum(y - n, y + n)) / S(n);
      if (best < windowed) best = windowed;
    }
    out.values[static_cast<size_t>(y - window.lo)] = best;
  }
  out.trim();
  return out;
}

// Convenience: window = support dilated by margin.
template <class S>
GridFunction<S> hl_maximal_margin(const GridFunction<S>& f, int64_t margin) {
  if (f.is_zero()) return {};
  return hl_maximal(f, Window{f.lo() - margin, f.hi() + margin});
}

struct NormedValue {
  double value = 0.0;
  double exponent = 1.0;
};

// (sum_x |f(x)|^p)^(1/p), double precision.
template <class S>
NormedValue lp_norm(const GridFunction<S>& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  double sum = 0.0;
  for (const S& v : f.values) sum += std::pow(std::abs(to_double(v)), p);
  return NormedValue{std::pow(sum, 1.0 / p), p};
}

// Certified upper bound on ||Mf||_p for p > 1: exact p-th power sum over the
// support dilated by margin, plus closed-form tails. Outside the window,
// any contributing N is at least the distance d to the support, so
// Mf(y) <= (sum |f|) / d and the tail is integral-bounded by
// (sum|f|)^p * margin^(1-p) / (p-1) per ray.
template <class S>
double hl_norm_upper(const GridFunction<S>& f, double p, int64_t margin) {
  if (p <= 1.0)
    throw std::invalid_argument("hl_norm_upper: needs p > 1 (the l^1 tail diverges)");
  if (margin < 1) throw std::invalid_argument("hl_norm_upper: margin must be >= 1");
  if (f.is_zero()) return 0.0;
  const auto mf = hl_maximal(f, Window{f.lo() - margin, f.hi() + margin});
  double window_sum = 0.0;
  for (const S& v : mf.values) window_sum += std::pow(to_double(v), p);
  double abs_mass = 0.0;
  for (const S& v : f.values) abs_mass += std::abs(to_double(v));
  const double tail = std::pow(abs_mass, p) *
                      std::pow(static_cast<double>(margin), 1.0 - p) / (p - 1.0);
  return std::pow(window_sum + 2.0 * tail, 1.0 / p);
}

// Frozen regression baselines for ||Mf||_p / ||f||_p over the corpus
// (delta, indicators, seeded random integer functions), windowed with
// certified tails at margin 1000. Empirical maxima rounded up at the second
// digit; the p -> 1 blow-up is why there is no p = 1 entry.
double recorded_hl_ratio_bound(double p);

struct MajorizationReport {
  double c_used = 0.0;
  double max_violation = 0.0;  // max over window of A_*(y) - C * product
  double max_ratio = 0.0;      // max over window of A_*(y) / product
};

// Closing step of the boundedness proof: A_*[fs](y) <= C * prod_i
// M(|f_i|^2)(y)^{1/2}, with C the live uniform-normalization max over the
// window's lambda range times the recorded restriction-ratio baseline.
// Both sides vanish together (each factor needs mass near y), so a positive
// A_* with zero product is an internal-consistency error.
template <class S>
MajorizationReport majorization_check(int n, std::span<const GridFunction<S>> fs,
                                      Window window,
                                      double restriction_constant = 0.0) {
  if (n < 5)
    throw std::invalid_argument("majorization_check: dimension must be >= 5");
  if (static_cast<size_t>(n) != fs.size())
    throw std::invalid_argument("majorization_check: need exactly n inputs");
  if (window.empty())
    throw std::invalid_argument("majorization_check: empty window");
  if (restriction_constant <= 0.0)
    restriction_constant = recorded_restriction_constant(n);

  MajorizationReport report;
  bool all_zero = true;
  for (const auto& f : fs) all_zero = all_zero && f.is_zero();
  if (all_zero) {
    report.c_used = restriction_constant;
    return report;
  }

  MaximalOptions options;
  options.window = window;
  const auto a_star = apply_maximal<S>(n, fs, options);

  int64_t lambda_max = 0;
  for (int64_t y : {window.lo, window.hi}) {
    int64_t bound = 0;
    for (const auto& f : fs) {
      const int64_t d = detail::max_support_distance(f, y);
      bound += d * d;
    }
    lambda_max = std::max(lambda_max, bound);
  }
  const double uniform = lambda_max >= 1
                             ? uniform_normalization_ratio(n, lambda_max).max_ratio
                             : 0.0;
  report.c_used = uniform * restriction_constant;

  std::vector<GridFunction<S>> maximal_sq;
  maximal_sq.reserve(fs.size());
  for (const auto& f : fs) {
    GridFunction<S> squared = f;
    for (S& v : squared.values) v = v * v;
    maximal_sq.push_back(hl_maximal(squared, window));
  }

  bool first = true;
  for (int64_t y = window.lo; y <= window.hi; ++y) {
    double product = 1.0;
    for (const auto& m : maximal_sq)
      product *= std::sqrt(to_double(m.at(y)));
    const double a = std::abs(to_double(a_star.at(y)));
    if (product == 0.0) {
      if (a != 0.0)
        throw InternalError("majorization_check: zero majorant under nonzero A_*");
      continue;
    }
    const double violation = a - report.c_used * product;
    const double ratio = a / product;
    if (first || violation > report.max_violation) report.max_violation = violation;
    if (first || ratio > report.max_ratio) report.max_ratio = ratio;
    first = false;
  }
  return report;
}

}  // namespace sphereavg

#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphereavg/averages.hpp"
#include "sphereavg/grid_function.hpp"

namespace sphereavg {

// Nearest integer to 2*sqrt(lambda), ties rounding half up. Always at least
// ceil(sqrt(lambda)), so every sphere coordinate is within range.
int64_t n_lambda(int64_t lambda);

// W(alpha, y) = sum_{|x|<=N} f(y-x) e(x^2 alpha) as a trigonometric polynomial
// in alpha: a sparse map from square frequencies s = x^2 in [0, N^2] to
// coefficients f(y-sqrt(s)) + f(y+sqrt(s)) (f(y) at s=0). Zero coefficients
// are dropped; terms are sorted by frequency.
template <class S>
struct WeylCoefficients {
  int64_t limit = 0;   // N
  int64_t center = 0;  // y
  std::vector<std::pair<int64_t, S>> terms;
};

template <class S>
WeylCoefficients<S> weyl_coefficients(const GridFunction<S>& f, int64_t limit,
                                      int64_t y) {
  if (limit < 0)
    throw std::invalid_argument("weyl_coefficients: N must be >= 0");
  WeylCoefficients<S> w;
  w.limit = limit;
  w.center = y;
  for (int64_t k = 0; k <= limit; ++k) {
    S coeff = f.at(y - k);
    if (k > 0) coeff = coeff + f.at(y + k);
    if (!(coeff == S(0))) w.terms.emplace_back(k * k, coeff);
  }
  return w;
}

namespace detail {

// e(t) = exp(2*pi*i*t), phase reduced in long double.
std::complex<double> unit_phase(long double t);

template <class S>
std::vector<std::pair<int64_t, double>> as_double_terms(
    const WeylCoefficients<S>& w) {
  std::vector<std::pair<int64_t, double>> out;
  out.reserve(w.terms.size());
  for (const auto& [s, c] : w.terms) out.emplace_back(s, to_double(c));
  return out;
}

template <class S>
std::string scalar_key(const S& v);
template <>
inline std::string scalar_key<Rat>(const Rat& v) {
  return v.to_fraction_string();
}
template <>
inline std::string scalar_key<double>(const double& v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

}  // namespace detail

// Direct evaluation of the Weyl sum at one alpha.
template <class S>
std::complex<double> weyl_sum(const GridFunction<S>& f, int64_t limit,
                              double alpha, int64_t y) {
  if (limit < 0) throw std::invalid_argument("weyl_sum: N must be >= 0");
  std::complex<double> total = 0.0;
  for (int64_t x = -limit; x <= limit; ++x) {
    const double v = to_double(f.at(y - x));
    if (v != 0.0)
      total += v * detail::unit_phase(static_cast<long double>(x) * x * alpha);
  }
  return total;
}

template <class S>
std::complex<double> evaluate(const WeylCoefficients<S>& w, double alpha) {
  std::complex<double> total = 0.0;
  for (const auto& [s, c] : w.terms)
    total += to_double(c) * detail::unit_phase(static_cast<long double>(s) * alpha);
  return total;
}

enum class MomentMethod { exact_even, quadrature };

struct QuadratureOptions {
  double tol = 1e-6;  // relative, between successive grid doublings
  int64_t max_points = (1 << 22) + 1;
};

struct MomentResult {
  double value = 0.0;
  MomentMethod method = MomentMethod::exact_even;
  std::optional<int64_t> points;
  std::optional<double> achieved_tol;
  std::optional<Rat> exact;  // filled by the exact-even route in exact mode
};

namespace detail {

MomentResult quadrature_moment(std::span<const std::pair<int64_t, double>> terms,
                               int64_t limit, int n, const QuadratureOptions& opts);

inline void store_exact(MomentResult& result, const Rat& total) {
  result.exact = total;
  result.value = total.to_double();
}
inline void store_exact(MomentResult& result, double total) {
  result.value = total;
}

}  // namespace detail

// int_Pi |W(alpha)|^n d alpha for even n, computed exactly by coefficient
// extraction: with A = coefficients of W^(n/2), orthogonality of e(m alpha)
// collapses the integral to sum_m A[m]^2 (W has real coefficients).
template <class S>
MomentResult weyl_moment_exact_even(const WeylCoefficients<S>& w, int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("weyl_moment_exact_even: n must be even and >= 2");
  MomentResult result;
  result.method = MomentMethod::exact_even;
  if (w.terms.empty()) {
    detail::store_exact(result, S(0));
    return result;
  }
  const int half = n / 2;
  const int64_t max_freq = w.terms.back().first;
  std::vector<S> acc(static_cast<size_t>(max_freq) + 1, S(0));
  for (const auto& [s, c] : w.terms) acc[static_cast<size_t>(s)] = c;
  for (int step = 2; step <= half; ++step) {
    std::vector<S> next(acc.size() + static_cast<size_t>(max_freq), S(0));
    for (const auto& [s, c] : w.terms)
      for (size_t i = 0; i < acc.size(); ++i)
        if (!(acc[i] == S(0)))
          next[i + static_cast<size_t>(s)] = next[i + static_cast<size_t>(s)] + acc[i] * c;
    acc.swap(next);
  }
  S total(0);
  for (const S& a : acc)
    if (!(a == S(0))) total = total + a * a;
  detail::store_exact(result, total);
  return result;
}

template <class S>
MomentResult weyl_moment(const WeylCoefficients<S>& w, int n, MomentMethod method,
                         const QuadratureOptions& opts = {}) {
  if (method == MomentMethod::exact_even) return weyl_moment_exact_even(w, n);
  auto terms = detail::as_double_terms(w);
  return detail::quadrature_moment(terms, w.limit, n, opts);
}

struct RestrictionReport {
  int n = 0;
  int64_t limit = 0;  // N
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  MomentMethod method = MomentMethod::exact_even;
  std::optional<int64_t> quadrature_points;
  std::optional<double> achieved_tol;
};

// Left side of the restriction inequality: the n-th moment of the Weyl sum of
// f itself (y = 0). Requires n > 4; the exact-even route additionally
// requires even n.
template <class S>
RestrictionReport restriction_lhs(const GridFunction<S>& f, int64_t limit, int n,
                                  MomentMethod method,
                                  const QuadratureOptions& opts = {}) {
  if (n <= 4)
    throw std::invalid_argument("restriction_lhs: exponent n must exceed 4");
  if (method == MomentMethod::exact_even && n % 2 != 0)
    throw std::invalid_argument("restriction_lhs: exact-even needs even n");
  const auto w = weyl_coefficients(f, limit, 0);
  const MomentResult moment = weyl_moment(w, n, method, opts);
  RestrictionReport report;
  report.n = n;
  report.limit = limit;
  report.lhs = moment.value;
  report.method = method;
  report.quadrature_points = moment.points;
  report.achieved_tol = moment.achieved_tol;
  return report;
}

// Full report with rhs = N^(n-2) * (N^{-1} sum_{|x|<=N} |f(x)|^2)^(n/2) and
// ratio = lhs/rhs; the inequality predicts the ratio is bounded by an
// absolute constant over all f and N.
template <class S>
RestrictionReport restriction_ratio(const GridFunction<S>& f, int64_t limit, int n,
                                    MomentMethod method,
                                    const QuadratureOptions& opts = {}) {
  if (limit < 1)
    throw std::invalid_argument("restriction_ratio: N must be >= 1");
  RestrictionReport report = restriction_lhs(f, limit, n, method, opts);
  double mass = 0.0;
  for (int64_t x = -limit; x <= limit; ++x) {
    const double v = to_double(f.at(x));
    mass += v * v;
  }
  if (mass == 0.0)
    throw std::invalid_argument(
        "restriction_ratio: f vanishes on [-N,N] (division by zero)");
  report.rhs = std::pow(static_cast<double>(limit), n - 2) *
               std::pow(mass / static_cast<double>(limit), n / 2.0);
  report.ratio = report.lhs / report.rhs;
  return report;
}

// Exact circle-method reconstruction: A_lambda(y) equals the frequency-lambda
// coefficient of W_1*...*W_n (orthogonality int_Pi e(m alpha) d alpha = [m=0])
// over r(lambda), with N = n_lambda(lambda). Frequencies are nonnegative, so
// the convolution may be truncated at lambda.
template <class S>
S reconstruct_average(int n, int64_t lambda, std::span<const GridFunction<S>> fs,
                      int64_t y, CountCache* counts = nullptr) {
  if (n < 4)
    throw std::invalid_argument("reconstruct_average: dimension must be >= 4");
  if (static_cast<size_t>(n) != fs.size())
    throw std::invalid_argument("reconstruct_average: need exactly n inputs");
  if (lambda < 1)
    throw std::invalid_argument("reconstruct_average: lambda must be >= 1");
  const int64_t limit = n_lambda(lambda);
  CountCache local(n);
  CountCache& cache = counts ? *counts : local;
  const uint128 r = cache.count(lambda);
  if (r == 0) throw InternalError("reconstruct_average: empty sphere");

  std::vector<S> acc(static_cast<size_t>(lambda) + 1, S(0));
  bool started = false;
  for (int i = 0; i < n; ++i) {
    const auto w = weyl_coefficients(fs[static_cast<size_t>(i)], limit, y);
    if (!started) {
      for (const auto& [s, c] : w.terms)
        if (s <= lambda) acc[static_cast<size_t>(s)] = c;
      started = true;
      continue;
    }
    std::vector<S> next(static_cast<size_t>(lambda) + 1, S(0));
    for (const auto& [s, c] : w.terms) {
      if (s > lambda) break;
      for (int64_t m = s; m <= lambda; ++m) {
        const S& a = acc[static_cast<size_t>(m - s)];
        if (!(a == S(0)))
          next[static_cast<size_t>(m)] = next[static_cast<size_t>(m)] + a * c;
      }
    }
    acc.swap(next);
  }
  return detail::divide_by_count(acc[static_cast<size_t>(lambda)], r);
}

// Memoizes torus moments across a sweep; keyed by the coefficient signature.
class MomentCache {
 public:
  template <class S>
  double get(const WeylCoefficients<S>& w, int n, MomentMethod method,
             const QuadratureOptions& opts) {
    std::string key = std::to_string(n);
    key += method == MomentMethod::exact_even ? "E" : "Q";
    for (const auto& [s, c] : w.terms) {
      key += ':';
      key += std::to_string(s);
      key += '=';
      key += detail::scalar_key<S>(c);
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const double value = weyl_moment(w, n, method, opts).value;
    cache_.emplace(std::move(key), value);
    return value;
  }

 private:
  std::map<std::string, double> cache_;
};

struct HolderReport {
  double lhs = 0.0;  // |A_lambda(y)|, exact route
  double mid = 0.0;  // (1/r) prod_i (int |W_i|^n)^(1/n)
  double rhs = 0.0;  // (N^(n-2)/r) prod_i (N^{-1} sum |f_i(y-x)|^2)^(1/2)
  bool ok = false;   // lhs <= mid * (1 + eps_num)
};

// The two-step bound chain at one (lambda, y): the first step is an exact
// inequality (Hoelder) and is asserted; the second holds only up to the
// restriction inequality's implied constant, so mid/rhs is reported, not
// asserted.
template <class S>
HolderReport holder_chain_check(int n, int64_t lambda,
                                std::span<const GridFunction<S>> fs, int64_t y,
                                const QuadratureOptions& opts = {},
                                double eps_num = 1e-9,
                                MomentCache* moments = nullptr,
                                CountCache* counts = nullptr) {
  if (n < 5)
    throw std::invalid_argument("holder_chain_check: dimension must be >= 5");
  CountCache local(n);
  CountCache& cache = counts ? *counts : local;
  const uint128 r = cache.count(lambda);
  const double r_d = static_cast<double>(r);
  const int64_t limit = n_lambda(lambda);
  const MomentMethod method =
      n % 2 == 0 ? MomentMethod::exact_even : MomentMethod::quadrature;

  HolderReport report;
  const auto a_lambda = apply_average<S>(n, lambda, fs, &cache);
  report.lhs = std::abs(to_double(a_lambda.at(y)));

  MomentCache local_moments;
  MomentCache& mcache = moments ? *moments : local_moments;
  double mid_product = 1.0;
  double rhs_product = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto& f = fs[static_cast<size_t>(i)];
    const auto w = weyl_coefficients(f, limit, y);
    mid_product *= std::pow(mcache.get(w, n, method, opts), 1.0 / n);
    double mass = 0.0;
    for (int64_t x = -limit; x <= limit; ++x) {
      const double v = to_double(f.at(y - x));
      mass += v * v;
    }
    rhs_product *= std::sqrt(mass / static_cast<double>(limit));
  }
  report.mid = mid_product / r_d;
  report.rhs = std::pow(static_cast<double>(limit), n - 2) / r_d * rhs_product;
  report.ok = report.lhs <= report.mid * (1.0 + eps_num);
  return report;
}

struct UniformRatio {
  double max_ratio = 0.0;
  int64_t argmax = 0;
};

// max over 1 <= lambda <= max_lambda of n_lambda(lambda)^(n-2) / r_n(lambda).
// Bounded for n >= 5; at n = 4 the same quantity blows up along lambda = 4^k,
// which is why the dimension restriction is needed.
UniformRatio uniform_normalization_ratio(int n, int64_t max_lambda);
double normalization_ratio_at(int n, int64_t lambda);

// Frozen regression baselines for the restriction-ratio sweeps (the
// inequality's constant is not derivable at desk scale; these are the
// empirical maxima recorded from this project's own corpus sweeps).
double recorded_restriction_constant(int n);

}  // namespace sphereavg

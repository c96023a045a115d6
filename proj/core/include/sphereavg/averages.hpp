#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sphereavg/budget.hpp"
#include "sphereavg/errors.hpp"
#include "sphereavg/grid_function.hpp"
#include "sphereavg/sphere_counts.hpp"

namespace sphereavg {

namespace detail {

inline Rat divide_by_count(const Rat& v, uint128 r) {
  if ((r >> 127) != 0)
    throw CapacityError("sphere count exceeds signed 128-bit range");
  return v / Rat::from_int128(static_cast<int128>(r));
}
inline double divide_by_count(double v, uint128 r) {
  return v / static_cast<double>(r);
}

// Weights h(s) = sum_{x^2 = s} f(y - x) for square s, as sorted sparse
// (s, weight) pairs with zero weights dropped.
template <class S>
std::vector<std::pair<int64_t, S>> square_weights(const GridFunction<S>& f,
                                                  int64_t y, int64_t max_lambda) {
  std::vector<std::pair<int64_t, S>> terms;
  for (int64_t k = 0; k * k <= max_lambda; ++k) {
    S h = f.at(y - k);
    if (k > 0) h = h + f.at(y + k);
    if (!(h == S(0))) terms.emplace_back(k * k, h);
  }
  return terms;
}

template <class S>
int64_t max_support_distance(const GridFunction<S>& f, int64_t y) {
  return std::max(std::abs(y - f.lo()), std::abs(y - f.hi()));
}

}  // namespace detail

// A_lambda[f_1,...,f_n](y) = (1/r(lambda)) * sum_{|x|^2=lambda} prod_i f_i(y-x_i),
// evaluated without materializing the n-dimensional sphere: per output point,
// the per-axis square weights are convolved over the radius budget s <= lambda
// and the coefficient at lambda is normalized by r(lambda). Exact when S = Rat.
template <class S>
GridFunction<S> apply_average(int n, int64_t lambda,
                              std::span<const GridFunction<S>> fs,
                              CountCache* counts = nullptr) {
  if (n < 4) throw std::invalid_argument("apply_average: dimension must be >= 4");
  if (static_cast<size_t>(n) != fs.size())
    throw std::invalid_argument("apply_average: need exactly n input functions");
  if (lambda < 1) throw std::invalid_argument("apply_average: lambda must be >= 1");

  CountCache local(n);
  CountCache& cache = counts ? *counts : local;
  const uint128 r = cache.count(lambda);
  if (r == 0) throw InternalError("apply_average: empty sphere");  // n >= 4 guard

  GridFunction<S> out;
  // y - x_i must lie in supp f_i with |x_i| <= sqrt(lambda), so the output is
  // confined to the intersection of the dilated supports.
  const int64_t root = isqrt_floor(lambda);
  int64_t y_lo = std::numeric_limits<int64_t>::min();
  int64_t y_hi = std::numeric_limits<int64_t>::max();
  for (const auto& f : fs) {
    if (f.is_zero()) return out;
    y_lo = std::max(y_lo, f.lo() - root);
    y_hi = std::min(y_hi, f.hi() + root);
  }
  if (y_hi < y_lo) return out;

  out.offset = y_lo;
  out.values.assign(static_cast<size_t>(y_hi - y_lo + 1), S(0));
  std::vector<S> acc, next;
  for (int64_t y = y_lo; y <= y_hi; ++y) {
    acc.assign(static_cast<size_t>(lambda) + 1, S(0));
    bool all_present = true;
    for (int i = 0; i < n && all_present; ++i) {
      auto terms = detail::square_weights(fs[static_cast<size_t>(i)], y, lambda);
      if (terms.empty()) {
        all_present = false;
        break;
      }
      if (i == 0) {
        for (const auto& [q, h] : terms) acc[static_cast<size_t>(q)] = h;
        continue;
      }
      next.assign(static_cast<size_t>(lambda) + 1, S(0));
      for (const auto& [q, h] : terms) {
        for (int64_t s = q; s <= lambda; ++s) {
          const S& a = acc[static_cast<size_t>(s - q)];
          if (!(a == S(0)))
            next[static_cast<size_t>(s)] = next[static_cast<size_t>(s)] + a * h;
        }
      }
      acc.swap(next);
    }
    if (all_present)
      out.values[static_cast<size_t>(y - y_lo)] =
          detail::divide_by_count(acc[static_cast<size_t>(lambda)], r);
  }
  out.trim();
  return out;
}

struct MaximalOptions {
  // Output window; defaults to the hull of the supports. A_* of inputs with
  // overlapping supports is nonzero on all of Z, so callers pick the window.
  std::optional<Window> window;
  // Testing hook: widens the per-point lambda bound; must never change results.
  int64_t lambda_margin = 0;
};

// Exact A_*[f_1,...,f_n](y) = sup_{lambda>=1} |A_lambda[...](y)|. For each y
// the sup is a max over the finite range 1 <= lambda <= sum_i d_i(y)^2 with
// d_i(y) the farthest support point of f_i from y: any larger lambda forces
// some |x_i| > d_i(y), killing the product. For nonnegative inputs the scan
// stops early once the running max reaches the a priori cap prod_i max f_i.
template <class S>
GridFunction<S> apply_maximal(int n, std::span<const GridFunction<S>> fs,
                              const MaximalOptions& options = {},
                              CountCache* counts = nullptr) {
  if (n < 4) throw std::invalid_argument("apply_maximal: dimension must be >= 4");
  if (static_cast<size_t>(n) != fs.size())
    throw std::invalid_argument("apply_maximal: need exactly n input functions");

  GridFunction<S> out;
  for (const auto& f : fs)
    if (f.is_zero()) return out;

  Window window;
  if (options.window) {
    window = *options.window;
  } else {
    window.lo = fs[0].lo();
    window.hi = fs[0].hi();
    for (const auto& f : fs) {
      window.lo = std::min(window.lo, f.lo());
      window.hi = std::max(window.hi, f.hi());
    }
  }
  if (window.empty()) return out;

  bool nonnegative = true;
  S cap(1);
  for (const auto& f : fs) {
    S fmax(0);
    for (const S& v : f.values) {
      if (v < S(0)) nonnegative = false;
      fmax = std::max(fmax, v);
    }
    cap = cap * fmax;
  }

  CountCache local(n);
  CountCache& cache = counts ? *counts : local;

  out.offset = window.lo;
  out.values.assign(static_cast<size_t>(window.size()), S(0));
  std::vector<std::vector<std::pair<int64_t, S>>> terms(static_cast<size_t>(n));
  std::vector<std::vector<S>> level(static_cast<size_t>(n));
  for (int64_t y = window.lo; y <= window.hi; ++y) {
    int64_t lambda_bound = options.lambda_margin;
    for (const auto& f : fs) {
      const int64_t d = detail::max_support_distance(f, y);
      lambda_bound += d * d;
    }
    for (int i = 0; i < n; ++i)
      terms[static_cast<size_t>(i)] =
          detail::square_weights(fs[static_cast<size_t>(i)], y, lambda_bound);

    for (auto& lv : level) {
      lv.clear();
      lv.reserve(64);
    }
    S best(0);
    for (int64_t s = 0; s <= lambda_bound; ++s) {
      for (int i = 0; i < n; ++i) {
        auto& lv = level[static_cast<size_t>(i)];
        S value(0);
        if (i == 0) {
          // Exact square lookup via binary search in the sorted term list.
          const auto& t0 = terms[0];
          auto it = std::lower_bound(
              t0.begin(), t0.end(), s,
              [](const auto& term, int64_t key) { return term.first < key; });
          if (it != t0.end() && it->first == s) value = it->second;
        } else {
          const auto& prev = level[static_cast<size_t>(i - 1)];
          for (const auto& [q, h] : terms[static_cast<size_t>(i)]) {
            if (q > s) break;
            const S& a = prev[static_cast<size_t>(s - q)];
            if (!(a == S(0))) value = value + a * h;
          }
        }
        lv.push_back(value);
      }
      if (s >= 1) {
        const S& numer = level[static_cast<size_t>(n - 1)][static_cast<size_t>(s)];
        if (!(numer == S(0))) {
          using std::abs;
          S candidate = abs(detail::divide_by_count(numer, cache.count(s)));
          if (best < candidate) best = candidate;
          if (nonnegative && best == cap) break;
        }
      }
    }
    out.values[static_cast<size_t>(y - window.lo)] = best;
  }
  out.trim();
  return out;
}

// A_*[delta,...,delta](y): the only sphere meeting the shifted unit masses is
// |x|^2 = n*y^2 (all coordinates equal to y), so the sup collapses to
// 1/r_n(n*y^2); at y = 0 that sphere is lambda = 0, excluded by the sup over
// lambda >= 1.
Rat delta_maximal(int n, int64_t y);

struct ScalingReport {
  int dimension = 0;
  int64_t half_width = 0;  // M
  double p = 0.0;
  double q = 0.0;
  double max_plateau_dev = 0.0;
  bool plateau_exact = false;
  double lq_lower = 0.0;       // l^q norm of A_* restricted to [-M, M]
  double lp_input_power = 0.0; // ||chi||_p^n = (4M+1)^(n/p)
  double ratio = 0.0;
};

// Necessity witness: chi = indicator of [-2M, 2M]. A_*[chi,...,chi] equals 1
// on |y| <= M (any sphere radius <= M stays inside the box), so the l^q norm
// of the restriction already gives the M^(1/q) lower bound.
ScalingReport scaling_witness(int n, int64_t half_width, double p, double q);

// Dense n-dimensional block with tiny support, intended for tensor products
// f_1 x ... x f_n used by the linear spherical average oracle.
template <class S>
struct TensorGridFunction {
  int dimension = 0;
  std::vector<int64_t> offsets;
  std::vector<int64_t> extents;
  std::vector<S> values;  // row-major

  S at(std::span<const int64_t> point) const {
    if (static_cast<int>(point.size()) != dimension)
      throw std::invalid_argument("TensorGridFunction::at: wrong arity");
    size_t index = 0;
    for (int axis = 0; axis < dimension; ++axis) {
      const int64_t rel = point[static_cast<size_t>(axis)] -
                          offsets[static_cast<size_t>(axis)];
      if (rel < 0 || rel >= extents[static_cast<size_t>(axis)]) return S(0);
      index = index * static_cast<size_t>(extents[static_cast<size_t>(axis)]) +
              static_cast<size_t>(rel);
    }
    return values[index];
  }

  static TensorGridFunction tensor_product(std::span<const GridFunction<S>> fs) {
    TensorGridFunction phi;
    phi.dimension = static_cast<int>(fs.size());
    int64_t cells = 1;
    for (const auto& f : fs) {
      if (f.is_zero()) {
        phi.offsets.assign(fs.size(), 0);
        phi.extents.assign(fs.size(), 0);
        return phi;
      }
      phi.offsets.push_back(f.lo());
      phi.extents.push_back(static_cast<int64_t>(f.values.size()));
      cells *= static_cast<int64_t>(f.values.size());
      if (cells > budget().max_tensor_cells)
        throw BudgetError("tensor_product: cell budget exceeded");
    }
    phi.values.assign(static_cast<size_t>(cells), S(1));
    std::vector<size_t> idx(fs.size(), 0);
    for (size_t flat = 0; flat < phi.values.size(); ++flat) {
      size_t rest = flat;
      for (int axis = phi.dimension - 1; axis >= 0; --axis) {
        const size_t extent = static_cast<size_t>(phi.extents[static_cast<size_t>(axis)]);
        idx[static_cast<size_t>(axis)] = rest % extent;
        rest /= extent;
      }
      S v(1);
      for (int axis = 0; axis < phi.dimension; ++axis)
        v = v * fs[static_cast<size_t>(axis)].values[idx[static_cast<size_t>(axis)]];
      phi.values[flat] = v;
    }
    return phi;
  }
};

// S_lambda phi(point) = (1/r(lambda)) sum_{|x|^2=lambda} phi(point - x) by
// direct sphere enumeration; the independent oracle for apply_average through
// the diagonal embedding identity.
template <class S>
S spherical_average_nd(const TensorGridFunction<S>& phi, int64_t lambda,
                       std::span<const int64_t> point) {
  if (lambda < 1)
    throw std::invalid_argument("spherical_average_nd: lambda must be >= 1");
  if (static_cast<int>(point.size()) != phi.dimension)
    throw std::invalid_argument("spherical_average_nd: wrong point arity");
  const auto points = enumerate_sphere(phi.dimension, lambda);
  if (points.empty()) throw InternalError("spherical_average_nd: empty sphere");
  S total(0);
  std::vector<int64_t> shifted(static_cast<size_t>(phi.dimension));
  for (const auto& x : points) {
    for (int axis = 0; axis < phi.dimension; ++axis)
      shifted[static_cast<size_t>(axis)] =
          point[static_cast<size_t>(axis)] - x.coordinates[static_cast<size_t>(axis)];
    total = total + phi.at(shifted);
  }
  return detail::divide_by_count(total, static_cast<uint128>(points.size()));
}

}  // namespace sphereavg

#pragma once

#include <cstdint>
#include <vector>

#include "sphereavg/rational.hpp"

namespace sphereavg {

// Finitely supported function Z -> scalars: index of the first stored value
// plus a contiguous value block. The stored window is minimal (first and last
// stored values nonzero); the zero function is the empty block. S is double
// in floating mode or Rat in exact mode.
template <class S>
struct GridFunction {
  int64_t offset = 0;
  std::vector<S> values;

  bool is_zero() const { return values.empty(); }
  int64_t lo() const { return offset; }
  int64_t hi() const { return offset + static_cast<int64_t>(values.size()) - 1; }

  S at(int64_t x) const {
    if (is_zero() || x < lo() || x > hi()) return S(0);
    return values[static_cast<size_t>(x - offset)];
  }

  void trim() {
    size_t first = 0;
    while (first < values.size() && values[first] == S(0)) ++first;
    size_t last = values.size();
    while (last > first && values[last - 1] == S(0)) --last;
    if (first == last) {
      values.clear();
      offset = 0;
      return;
    }
    if (first > 0 || last < values.size()) {
      std::vector<S> kept(values.begin() + static_cast<ptrdiff_t>(first),
                          values.begin() + static_cast<ptrdiff_t>(last));
      values.swap(kept);
      offset += static_cast<int64_t>(first);
    }
  }

  static GridFunction from_values(int64_t offset, std::vector<S> values) {
    GridFunction f;
    f.offset = offset;
    f.values = std::move(values);
    f.trim();
    return f;
  }

  // Unit mass at the given position.
  static GridFunction delta(int64_t position = 0) {
    return from_values(position, {S(1)});
  }

  // 1 on [-half_width, half_width].
  static GridFunction indicator(int64_t half_width) {
    return from_values(-half_width,
                       std::vector<S>(static_cast<size_t>(2 * half_width + 1), S(1)));
  }

  bool operator==(const GridFunction&) const = default;
};

// Inclusive integer interval used for output windows.
struct Window {
  int64_t lo = 0;
  int64_t hi = -1;
  bool empty() const { return hi < lo; }
  int64_t size() const { return empty() ? 0 : hi - lo + 1; }
};

inline double to_double(double v) { return v; }
inline double to_double(const Rat& v) { return v.to_double(); }

template <class S>
GridFunction<double> to_double_grid(const GridFunction<S>& f) {
  GridFunction<double> out;
  out.offset = f.offset;
  out.values.reserve(f.values.size());
  for (const S& v : f.values) out.values.push_back(to_double(v));
  out.trim();
  return out;
}

}  // namespace sphereavg

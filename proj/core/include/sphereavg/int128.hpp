#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "sphereavg/errors.hpp"

namespace sphereavg {

using int128 = __int128;
using uint128 = unsigned __int128;

inline std::string to_string(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline std::string to_string(int128 v) {
  if (v < 0) return "-" + to_string(static_cast<uint128>(-(v + 1)) + 1);
  return to_string(static_cast<uint128>(v));
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapacityError("128-bit addition overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw CapacityError("128-bit subtraction overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapacityError("128-bit multiplication overflow");
  return r;
}

inline uint128 checked_add(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw CapacityError("128-bit addition overflow");
  return r;
}

inline uint128 checked_mul(uint128 a, uint128 b) {
  uint128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapacityError("128-bit multiplication overflow");
  return r;
}

// gcd of |a| and |b|; gcd128(0, 0) == 0.
inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// floor(sqrt(v)) for v >= 0, exact.
inline int64_t isqrt_floor(int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && static_cast<int128>(r) * r > v) --r;
  while (static_cast<int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline bool is_perfect_square(int64_t v) {
  if (v < 0) return false;
  int64_t r = isqrt_floor(v);
  return r * r == v;
}

}  // namespace sphereavg

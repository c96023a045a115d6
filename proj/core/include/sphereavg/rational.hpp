#pragma once

#include <cstdint>
#include <string>

#include "sphereavg/int128.hpp"

namespace sphereavg {

// Exact rational scalar over signed 128-bit integers. Always kept reduced
// with a positive denominator; every arithmetic step is overflow-checked and
// throws CapacityError instead of wrapping. This is the scalar used in exact
// mode, where results are wide-integer numerators over sphere counts.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(int64_t v) : num_(v) {}  // NOLINT: implicit by design

  static Rat from_int128(int128 v) {
    Rat r;
    r.num_ = v;
    return r;
  }

  static Rat fraction(int128 num, int128 den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    Rat r;
    r.num_ = num;
    r.den_ = den;
    r.reduce();
    return r;
  }

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

  std::string to_fraction_string() const {
    return to_string(num_) + "/" + to_string(den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat::fraction(
        checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
        checked_mul(a.den_, b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat::fraction(
        checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
        checked_mul(a.den_, b.den_));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    // Cross-reduce first so intermediates stay small.
    int128 g1 = gcd128(a.num_, b.den_);
    int128 g2 = gcd128(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    Rat r;
    r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return a * Rat::fraction(b.den_, b.num_);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign();
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int128 num_ = 0;
  int128 den_ = 1;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

}  // namespace sphereavg

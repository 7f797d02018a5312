#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace steiner {

/// Exact rational arithmetic on 64-bit integers.
///
/// Canonical form: den > 0, gcd(|num|, den) == 1, zero is 0/1. Comparisons
/// and arithmetic go through __int128 intermediates; narrowing back to
/// 64 bits throws on overflow instead of wrapping.
class Rational {
 public:
  Rational() = default;

  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    __int128 n = num;
    __int128 d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assign(n, d);
  }

  static Rational from_int(long long v) { return Rational(v, 1); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q" with the canonical (reduced) pair.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_,
                i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_,
                i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator-() const { return make(-i128(num_), i128(den_)); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    Rational r;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    r.assign(n, d);
    return r;
  }

  void assign(i128 n, i128 d) {
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rational: 64-bit overflow");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace steiner

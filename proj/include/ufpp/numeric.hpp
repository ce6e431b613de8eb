#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ufpp {

using i64 = std::int64_t;
using i128 = __int128;

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
  return r;
}

inline i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw overflow_error("value does not fit in 64 bits");
  return static_cast<i64>(v);
}

/// 2^e as a 64-bit integer; e must be in [0, 62].
inline i64 pow2(int e) {
  if (e < 0 || e > 62) throw overflow_error("2^" + std::to_string(e) + " out of range");
  return i64{1} << e;
}

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (den > 0, gcd(num, den) = 1). Products are formed in 128 bits and
/// narrowed with an overflow check.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i64 n, i64 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    set(n, d);
  }

  /// 2^e for any integer e with |e| <= 62.
  static Rational power_of_two(int e) {
    return e >= 0 ? Rational(pow2(e)) : Rational(1, pow2(-e));
  }

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  /// Largest integer <= value.
  i64 floor() const {
    i64 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  i64 ceil() const {
    i64 q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128{a.num_} * b.den_ + i128{b.num_} * a.den_, i128{a.den_} * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(i128{a.num_} * b.den_ - i128{b.num_} * a.den_, i128{a.den_} * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return from128(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
  }
  Rational operator-() const { return Rational(checked_sub(0, num_), den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128{a.num_} * b.den_ <=> i128{b.num_} * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Rational from128(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    if (r.den_ == 0) r.den_ = 1;
    return r;
  }
  void set(i64 n, i64 d) { *this = from128(n, d); }

  i64 num_ = 0;
  i64 den_ = 1;
};

/// Parses "a", "a/b" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

/// Exact test of value <= r * scale, evaluated in 128-bit arithmetic.
inline bool leq_scaled(i64 value, const Rational& r, i64 scale) {
  return i128{value} * r.den() <= i128{r.num()} * scale;
}

}  // namespace ufpp

#pragma once

#include <string>
#include <string_view>

#include "zlconst/bigint.hpp"

namespace zlc {

/// Reduced fraction with arbitrary-precision parts. Invariants:
/// gcd(|num|, den) = 1 and den > 0. This is the value type of every
/// closed-form amenability formula, so golden tests can demand exact
/// equality ("73/25" really is 73/25).
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}
  Rational(BigInt n, BigInt d);

  /// Parses "num/den" or a plain integer.
  static Rational parse(std::string_view s);
  static Rational pow(const Rational& base, int exponent);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Always "num/den", e.g. "73/25", "1/1", "-8/3".
  std::string str() const;
  double to_double() const;

private:
  void reduce();

  BigInt num_;
  BigInt den_;
};

}  // namespace zlc

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zlc {

/// Signed arbitrary-precision integer, little-endian base-2^32 limbs.
/// Small and self-contained: the closed-form formulas only ever touch
/// numbers of a few hundred bits, so simplicity beats speed here.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  static BigInt from_string(std::string_view s);
  static BigInt pow(const BigInt& base, unsigned exponent);
  static BigInt gcd(BigInt a, BigInt b);  // always >= 0

  /// Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }
  BigInt abs() const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  std::string str() const;
  double to_double() const;

  /// True when the value fits in int64; `to_int64` asserts it does.
  bool fits_int64() const;
  long long to_int64() const;

private:
  static int cmp(const BigInt& a, const BigInt& b);
  static int cmp_abs(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_abs(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_abs(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();
  void shift_left_one_bit();
  bool bit(std::size_t i) const;
  std::size_t bit_length() const;
  std::uint32_t div_small(std::uint32_t d);  // in place, returns remainder
  void mul_small_add(std::uint32_t m, std::uint32_t add);

  std::vector<std::uint32_t> limbs_;  // no trailing zero limbs; empty == 0
  bool neg_ = false;
};

}  // namespace zlc

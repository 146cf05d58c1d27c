#include "zlconst/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "zlconst/errors.hpp"

namespace zlc {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  // avoid UB on LLONG_MIN
  std::uint64_t u = neg_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (u != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

BigInt BigInt::from_string(std::string_view s) {
  BigInt r;
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw UsageError("InvalidInteger", "empty integer literal");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw UsageError("InvalidInteger", "bad digit in '" + std::string(s) + "'");
    r.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
  }
  r.neg_ = neg && !r.is_zero();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
  int c = cmp_abs(a, b);
  return a.neg_ ? -c : c;
}

std::vector<std::uint32_t> BigInt::add_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  return r;
}

std::vector<std::uint32_t> BigInt::sub_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (neg_ == o.neg_) {
    limbs_ = add_abs(limbs_, o.limbs_);
  } else if (cmp_abs(*this, o) >= 0) {
    limbs_ = sub_abs(limbs_, o.limbs_);
  } else {
    limbs_ = sub_abs(o.limbs_, limbs_);
    neg_ = o.neg_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (is_zero() || o.is_zero()) {
    limbs_.clear();
    neg_ = false;
    return *this;
  }
  std::vector<std::uint32_t> r(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  limbs_ = std::move(r);
  neg_ = neg_ != o.neg_;
  trim();
  return *this;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

void BigInt::shift_left_one_bit() {
  std::uint32_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry != 0) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw NumericError("DivisionByZero", "BigInt division by zero");
  // bitwise long division on magnitudes; values in this library stay small
  // enough that O(bits * limbs) is irrelevant
  BigInt babs = b.abs();
  q = BigInt{};
  r = BigInt{};
  std::size_t n = a.bit_length();
  std::vector<std::uint32_t> qlimbs((n + 31) / 32 + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    r.shift_left_one_bit();
    if (a.bit(i)) {
      if (r.limbs_.empty()) r.limbs_.push_back(0);
      r.limbs_[0] |= 1u;
    }
    if (cmp_abs(r, babs) >= 0) {
      r.limbs_ = sub_abs(r.limbs_, babs.limbs_);
      r.trim();
      qlimbs[i / 32] |= (1u << (i % 32));
    }
  }
  q.limbs_ = std::move(qlimbs);
  q.neg_ = a.neg_ != b.neg_;
  q.trim();
  r.neg_ = a.neg_;
  r.trim();
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(r);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned exponent) {
  BigInt result{1};
  BigInt acc = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= acc;
    exponent >>= 1;
    if (exponent != 0) acc *= acc;
  }
  return result;
}

std::uint32_t BigInt::div_small(std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

void BigInt::mul_small_add(std::uint32_t m, std::uint32_t add) {
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
    carry = cur >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  BigInt tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t chunk = tmp.div_small(1000000000u);
    if (tmp.is_zero()) {
      out = std::to_string(chunk) + out;
    } else {
      std::string part = std::to_string(chunk);
      out = std::string(9 - part.size(), '0') + part + out;
    }
  }
  return (neg_ ? "-" : "") + out;
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
  return neg_ ? -v : v;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = 0;
  if (limbs_.size() >= 1) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return neg_ ? mag <= 0x8000000000000000ull : mag <= 0x7fffffffffffffffull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw NumericError("IntegerOverflow", "BigInt does not fit in int64");
  std::uint64_t mag = 0;
  if (limbs_.size() >= 1) mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (neg_) return static_cast<long long>(~mag + 1);
  return static_cast<long long>(mag);
}

}  // namespace zlc

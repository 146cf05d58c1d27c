#include "zlconst/rational.hpp"

#include "zlconst/errors.hpp"

namespace zlc {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw NumericError("DivisionByZero", "rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {BigInt::from_string(s), BigInt(1)};
  return {BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1))};
}

Rational Rational::pow(const Rational& base, int exponent) {
  if (exponent >= 0)
    return {BigInt::pow(base.num_, static_cast<unsigned>(exponent)),
            BigInt::pow(base.den_, static_cast<unsigned>(exponent))};
  if (base.num_.is_zero()) throw NumericError("DivisionByZero", "0 raised to a negative power");
  return {BigInt::pow(base.den_, static_cast<unsigned>(-exponent)),
          BigInt::pow(base.num_, static_cast<unsigned>(-exponent))};
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_.is_zero()) throw NumericError("DivisionByZero", "rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

}  // namespace zlc

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zlconst/bigint.hpp"
#include "zlconst/errors.hpp"
#include "zlconst/rational.hpp"

using zlc::BigInt;
using zlc::Rational;

TEST_CASE("bigint agrees with int64 on small values") {
  std::mt19937_64 rng(42);
  auto draw32 = [&]() {
    return static_cast<long long>(static_cast<std::int32_t>(rng()));
  };
  for (int i = 0; i < 2000; ++i) {
    long long a = draw32(), b = draw32();
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
      CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
    }
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
    CHECK(BigInt(a).str() == std::to_string(a));
    CHECK(BigInt(a).to_int64() == a);
  }
}

TEST_CASE("bigint division property on wide operands") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    BigInt a = BigInt(static_cast<long long>(rng())) * BigInt(static_cast<long long>(rng() >> 8));
    BigInt b = BigInt(static_cast<long long>(rng() >> 20));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("bigint large values and strings") {
  BigInt two64 = BigInt::pow(BigInt(2), 64);
  CHECK(two64.str() == "18446744073709551616");
  CHECK((two64 * two64).str() == "340282366920938463463374607431768211456");
  CHECK(BigInt::from_string("-340282366920938463463374607431768211456") == -(two64 * two64));
  CHECK(BigInt::from_string("0").is_zero());
  CHECK(!two64.fits_int64());
  CHECK(BigInt(-9223372036854775807LL - 1).fits_int64());
  CHECK_THROWS_AS(BigInt::from_string("12x"), zlc::UsageError);
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    long long a = static_cast<std::int32_t>(rng()), b = static_cast<std::int32_t>(rng());
    long long g = std::gcd(a, b);
    CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(g));
  }
}

TEST_CASE("rational reduction and formatting") {
  CHECK(Rational(146, 50).str() == "73/25");
  CHECK(Rational(7, -3).str() == "-7/3");
  CHECK(Rational(0, 17).str() == "0/1");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational::parse("73/25") == Rational(73, 25));
  CHECK(Rational::parse("-6") == Rational(-6));
  CHECK_THROWS_AS(Rational(1, 0), zlc::NumericError);
}

TEST_CASE("rational arithmetic and order") {
  Rational a(7, 3), b(3, 4);
  CHECK(a + b == Rational(37, 12));
  CHECK(a - b == Rational(19, 12));
  CHECK(a * b == Rational(7, 4));
  CHECK(a / b == Rational(28, 9));
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(Rational(7, 4) < Rational(2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(5, 1).is_integer());
  CHECK(!Rational(5, 2).is_integer());
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    long long n1 = static_cast<std::int16_t>(rng()), d1 = 1 + (rng() % 1000);
    long long n2 = static_cast<std::int16_t>(rng()), d2 = 1 + (rng() % 1000);
    Rational x(n1, d1), y(n2, d2);
    CHECK((x + y) - y == x);
    if (n2 != 0) CHECK((x / y) * y == x);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zlconst/errors.hpp"
#include "zlconst/finite_field.hpp"

using namespace zlc;

TEST_CASE("primality and prime power decomposition") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
  CHECK(prime_power_decompose(8) == std::make_pair(2, 3));
  CHECK(prime_power_decompose(9) == std::make_pair(3, 2));
  CHECK(prime_power_decompose(13) == std::make_pair(13, 1));
  CHECK(!prime_power_decompose(12));
  CHECK(!prime_power_decompose(1));
}

TEST_CASE("prime field basics") {
  FieldSpec F = make_field(3, 1);
  CHECK(F.q == 3);
  CHECK(F.modulus == std::vector<int>{0, 1});
  CHECK(F.add(1, 2) == 0);
  CHECK(F.mul(2, 2) == 1);

  FieldSpec F5 = make_field(5, 1);
  CHECK(F5.inv(2) == 3);
}

TEST_CASE("modulus of GF(9) found by exhaustive search") {
  // oracle: scan monic quadratics over F3 in ascending (c0, c1) order and
  // keep the first with no root
  std::vector<int> first;
  for (int c0 = 0; c0 < 3 && first.empty(); ++c0) {
    for (int c1 = 0; c1 < 3 && first.empty(); ++c1) {
      bool root = false;
      for (int x = 0; x < 3; ++x)
        if ((c0 + c1 * x + x * x) % 3 == 0) root = true;
      if (!root) first = {c0, c1, 1};
    }
  }
  REQUIRE(first == std::vector<int>{1, 0, 1});  // x^2 + 1
  CHECK(make_field(3, 2).modulus == first);
}

TEST_CASE("GF(4): modulus, squaring, cyclic unit group") {
  FieldSpec F = make_field(2, 2);
  CHECK(F.modulus == std::vector<int>{1, 1, 1});  // x^2 + x + 1
  CHECK(F.mul(2, 2) == 3);                        // x * x = x + 1
  int g = multiplicative_generator(F);
  int order = 1;
  int v = g;
  while (v != 1) {
    v = F.mul(v, g);
    ++order;
  }
  CHECK(order == 3);
}

TEST_CASE("construction is deterministic") {
  for (auto [p, k] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 6}}) {
    CHECK(make_field(p, k).modulus == make_field(p, k).modulus);
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_WITH_AS(make_field(4, 1), doctest::Contains("NotPrime"), ConstructionError);
  CHECK_THROWS_WITH_AS(make_field(2, 7), doctest::Contains("DegreeTooLarge"), ConstructionError);
  CHECK_THROWS_WITH_AS(make_field(3, 0), doctest::Contains("DegreeTooLarge"), ConstructionError);
  CHECK_THROWS_WITH_AS(make_field(5, 1).inv(0), doctest::Contains("DivisionByZero"), NumericError);
}

TEST_CASE("smallest generators") {
  CHECK(multiplicative_generator(make_field(5, 1)) == 2);
  CHECK(multiplicative_generator(make_field(7, 1)) == 3);  // 2 has order 3 mod 7
  CHECK(multiplicative_generator(make_field(3, 1)) == 2);
}

TEST_CASE("generator order is exactly q-1") {
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {13, 1}}) {
    FieldSpec F = make_field(p, k);
    int g = multiplicative_generator(F);
    int v = g, order = 1;
    while (v != 1) {
      v = F.mul(v, g);
      ++order;
      REQUIRE(order <= F.q);
    }
    CHECK(order == F.q - 1);
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
  for (auto [p, k] :
       {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3},
        {7, 2}}) {
    FieldSpec F = make_field(p, k);
    REQUIRE(F.q <= 49);
    for (int a = 0; a < F.q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, F.q - 1) == 1);
      }
      for (int b = 0; b < F.q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < F.q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

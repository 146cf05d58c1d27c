#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zlconst/errors.hpp"
#include "zlconst/families.hpp"

using namespace zlc;

namespace {

std::vector<int> sorted_class_sizes(const GroupTable& G) {
  auto s = conjugacy_classes(G).sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("dihedral groups") {
  GroupTable D3 = dihedral(3);
  CHECK(D3.order == 6);
  CHECK(conjugacy_classes(D3).sizes == std::vector<int>{1, 2, 3});

  GroupTable D4 = dihedral(4);
  CHECK(D4.order == 8);
  CHECK(derived_subgroup(D4).order == 2);

  GroupTable D5 = dihedral(5);
  CHECK(center(D5).order == 1);
  CHECK(derived_subgroup(D5).order == 5);

  CHECK_THROWS_WITH_AS(dihedral(2), doctest::Contains("ArgumentTooSmall"), ConstructionError);
}

TEST_CASE("heisenberg-type extraspecial groups") {
  GroupTable E8 = extraspecial_heisenberg(2, 1);
  CHECK(E8.order == 8);
  // same invariants as the dihedral group of order 8
  GroupTable D4 = dihedral(4);
  CHECK(sorted_class_sizes(E8) == sorted_class_sizes(D4));
  int order4 = 0;
  for (int g = 0; g < E8.order; ++g) {
    int sq = E8.at(g, g);
    if (sq != E8.identity && E8.at(sq, sq) == E8.identity) ++order4;
  }
  CHECK(order4 == 2);  // two elements of order 4, as in D4 (Q8 has six)

  GroupTable E27 = extraspecial_heisenberg(3, 1);
  CHECK(E27.order == 27);
  CHECK(center(E27).order == 3);
  CHECK(derived_subgroup(E27).order == 3);
  auto sizes = conjugacy_classes(E27).sizes;
  CHECK(std::count(sizes.begin(), sizes.end(), 1) == 3);
  CHECK(std::count(sizes.begin(), sizes.end(), 3) == 8);

  GroupTable E32 = extraspecial_heisenberg(2, 2);
  CHECK(E32.order == 32);
  CHECK(E32.order / derived_subgroup(E32).order == 16);  // 16 linear characters

  GroupTable E125 = extraspecial_heisenberg(5, 1);
  CHECK(E125.order == 125);
  CHECK(center(E125).order == 5);

  CHECK_THROWS_WITH_AS(extraspecial_heisenberg(3, 4), doctest::Contains("OrderExceedsCap"),
                       ConstructionError);
  CHECK_THROWS_WITH_AS(extraspecial_heisenberg(4, 1), doctest::Contains("NotPrime"),
                       ConstructionError);
}

TEST_CASE("quaternion group") {
  GroupTable Q8 = quaternion8();
  CHECK(Q8.order == 8);
  CHECK(conjugacy_classes(Q8).sizes == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(center(Q8).order == 2);
  CHECK(derived_subgroup(Q8).order == 2);
  int order4 = 0;
  for (int g = 0; g < Q8.order; ++g) {
    int sq = Q8.at(g, g);
    if (sq != Q8.identity && Q8.at(sq, sq) == Q8.identity) ++order4;
  }
  CHECK(order4 == 6);  // distinguishes Q8 from D4
}

TEST_CASE("affine groups") {
  GroupTable A3 = affine_group(3);
  CHECK(A3.order == 6);
  CHECK(sorted_class_sizes(A3) == sorted_class_sizes(dihedral(3)));

  GroupTable A5 = affine_group(5);
  CHECK(A5.order == 20);
  CHECK(A5.order / derived_subgroup(A5).order == 4);  // q - 1 linear characters

  CHECK(affine_group(4).order == 12);
  CHECK(affine_group(8).order == 56);
  CHECK(affine_group(9).order == 72);

  CHECK_THROWS_WITH_AS(affine_group(6), doctest::Contains("InvalidFieldOrder"),
                       ConstructionError);
  CHECK_THROWS_WITH_AS(affine_group(2), doctest::Contains("InvalidFieldOrder"),
                       ConstructionError);
}

TEST_CASE("a2xb groups") {
  GroupTable G5 = a2xb_group(5);
  CHECK(G5.order == 10);
  CHECK(sorted_class_sizes(G5) == sorted_class_sizes(dihedral(5)));
  CHECK(derived_subgroup(G5).order == 5);

  GroupTable G7 = a2xb_group(7);
  CHECK(G7.order == 21);
  CHECK(G7.order / derived_subgroup(G7).order == 3);

  CHECK(a2xb_group(9).order == 36);
  CHECK(a2xb_group(9).order * 2 == affine_group(9).order);

  CHECK_THROWS_WITH_AS(a2xb_group(4), doctest::Contains("EvenCharacteristic"),
                       ConstructionError);
  CHECK_THROWS_WITH_AS(a2xb_group(8), doctest::Contains("EvenCharacteristic"),
                       ConstructionError);
  CHECK_THROWS_WITH_AS(a2xb_group(3), doctest::Contains("ArgumentTooSmall"), ConstructionError);
}

TEST_CASE("frobenius semidirect products") {
  GroupTable F21 = frobenius_cyclic(7, 3, 2);
  CHECK(F21.order == 21);
  CHECK(sorted_class_sizes(F21) == std::vector<int>{1, 3, 3, 7, 7});
  CHECK(center(F21).order == 1);

  // odd dihedral groups are the h = 2 case with inversion
  for (int n : {5, 7, 9}) {
    GroupTable F = frobenius_cyclic(n, 2, n - 1);
    CHECK(F.order == 2 * n);
    CHECK(sorted_class_sizes(F) == sorted_class_sizes(dihedral(n)));
  }

  // Z5 x| Z4 by doubling matches the affine group of F5 structurally
  GroupTable F20 = frobenius_cyclic(5, 4, 2);
  CHECK(F20.order == 20);
  CHECK(sorted_class_sizes(F20) == sorted_class_sizes(affine_group(5)));
  CHECK(derived_subgroup(F20).order == derived_subgroup(affine_group(5)).order);

  // Z4 on Z5 through the order-2 quotient: 4^2 = 16 = 1 mod 5
  CHECK_THROWS_WITH_AS(frobenius_cyclic(5, 4, 4), doctest::Contains("NotFixedPointFree"),
                       ConstructionError);
  CHECK_THROWS_WITH_AS(frobenius_cyclic(5, 3), doctest::Contains("DivisibilityViolation"),
                       ConstructionError);

  // multi-factor kernel: (Z2 x Z2) x| Z3 cycling the involutions (A4)
  FrobeniusSpec spec;
  spec.kernel_orders = {2, 2};
  spec.complement_orders = {3};
  spec.action = {{{0, 1}, {1, 1}}};  // e1 -> e2, e2 -> e1+e2
  GroupTable A4 = frobenius_semidirect(spec);
  CHECK(A4.order == 12);
  CHECK(sorted_class_sizes(A4) == std::vector<int>{1, 3, 4, 4});
}

TEST_CASE("abelian baselines") {
  CHECK(cyclic(1).order == 1);
  GroupTable Z4 = cyclic(4);
  CHECK(Z4.order == 4);
  CHECK(conjugacy_classes(Z4).sizes == std::vector<int>(4, 1));
  GroupTable K4 = abelian_product({2, 2});
  CHECK(K4.order == 4);
  for (int g = 0; g < 4; ++g) CHECK(K4.at(g, g) == 0);  // exponent 2
  CHECK_THROWS_WITH_AS(cyclic(5000), doctest::Contains("OrderExceedsCap"), ConstructionError);
  CHECK(cyclic(5000, 8192).order == 5000);
}

TEST_CASE("every family constructor yields a valid table") {
  for (const GroupTable& G : {dihedral(6), extraspecial_heisenberg(3, 1), quaternion8(),
                              affine_group(7), a2xb_group(9), frobenius_cyclic(13, 4),
                              abelian_product({2, 3})}) {
    validate_group_table(G);  // throws on violation
    CHECK(G.at(G.identity, 0) == 0);
  }
}

#pragma once

#include <string>
#include <vector>

#include "zlconst/group.hpp"

namespace zlc {

/// Abelian-by-abelian semidirect product data. Kernel and complement are
/// direct products of cyclic groups; the action maps each complement
/// generator to an automorphism of the kernel, given by the images of the
/// kernel's cyclic generators (as exponent tuples over those generators).
struct FrobeniusSpec {
  std::vector<int> kernel_orders;
  std::vector<int> complement_orders;
  // action[i][j] = image of kernel generator j under the automorphism
  // attached to complement generator i
  std::vector<std::vector<std::vector<int>>> action;
};

/// Dihedral group of order 2n (n >= 3), realized as permutations of n points
/// from the rotation/reflection generators.
GroupTable dihedral(int n, int order_cap = kDefaultOrderCap);

/// Heisenberg-type group of order p^(2n+1): triples (a, b, c) in
/// F_p^n x F_p^n x F_p with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b').
/// Verified extraspecial after the build: |Z| = |G'| = p and the central
/// quotient is elementary abelian. For p = 2, n = 1 this is the dihedral
/// group of order 8; the quaternion group is provided separately.
GroupTable extraspecial_heisenberg(int p, int n, int order_cap = kDefaultOrderCap);

/// The unit quaternions {±1, ±i, ±j, ±k}.
GroupTable quaternion8();

/// Affine maps x -> ax + b of GF(q), order q(q-1). Requires q a prime power >= 3.
GroupTable affine_group(int q, int order_cap = kDefaultOrderCap);

/// Index-2 subgroup of the affine group whose multiplier is a square,
/// order q(q-1)/2. Requires q an odd prime power >= 5.
GroupTable a2xb_group(int q, int order_cap = kDefaultOrderCap);

/// K x| H for abelian K, H with a fixed-point-free action. Checks
/// h | k-1 (DivisibilityViolation) and rejects actions where a nontrivial
/// complement element fixes a nontrivial kernel element (NotFixedPointFree).
/// The build verifies the Frobenius class structure: trivial centre,
/// (k-1)/h classes of size h and h-1 classes of size k.
GroupTable frobenius_semidirect(const FrobeniusSpec& spec, int order_cap = kDefaultOrderCap);

/// Z_k x| Z_h with the action x -> multiplier * x. multiplier = 0 picks the
/// smallest valid multiplier automatically.
GroupTable frobenius_cyclic(int k, int h, int multiplier = 0, int order_cap = kDefaultOrderCap);

GroupTable cyclic(int n, int order_cap = kDefaultOrderCap);
GroupTable abelian_product(const std::vector<int>& orders, int order_cap = kDefaultOrderCap);

}  // namespace zlc

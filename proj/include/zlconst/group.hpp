#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zlconst/perm.hpp"

namespace zlc {

/// Groups above the cap are rejected outright; with 16-bit element indices
/// the default keeps the multiplication table under ~32 MB.
inline constexpr int kDefaultOrderCap = 4096;
inline constexpr int kMaxOrderCap = 65535;

using Elem = std::uint16_t;

/// A finite group as a dense Cayley table over element indices 0..order-1.
/// Immutable after construction; all operations on it are pure.
struct GroupTable {
  std::string label;
  int order = 1;
  Elem identity = 0;
  std::vector<Elem> mul;  // row-major, mul[a*order + b] = a*b
  std::vector<Elem> inv;

  Elem at(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
};

/// Conjugacy classes, ordered by (size, smallest member); class 0 is {identity}.
struct ConjClassPartition {
  std::vector<std::vector<Elem>> classes;  // each sorted ascending
  std::vector<int> sizes;
  std::vector<Elem> reps;  // smallest member of each class
  std::vector<int> class_of;
};

struct SubgroupHandle {
  std::vector<bool> member;
  int order = 0;

  bool contains(int g) const { return member[g]; }
};

/// Closure of permutation generators by BFS from the identity; element 0 is
/// the identity and element order is the (deterministic) BFS discovery order.
/// Throws ClosureExceedsLimit or InvalidPermutation.
GroupTable build_from_generators(const std::vector<Permutation>& generators, int max_order,
                                 std::string label = {});

/// Checks the GroupTable invariants: Latin square, identity, inverses, and
/// associativity (exhaustive for order <= 256, >= 10*order sampled triples
/// above that). Throws ConstructionError on violation.
void validate_group_table(const GroupTable& G);

ConjClassPartition conjugacy_classes(const GroupTable& G);

/// Subgroup generated by all commutators x y x^-1 y^-1.
SubgroupHandle derived_subgroup(const GroupTable& G);

SubgroupHandle center(const GroupTable& G);

bool is_abelian(const GroupTable& G);

/// a_{ijk}: the number of pairs (x, y) in C_i x C_j with x*y equal to a fixed
/// representative of C_k. Independent of the representative chosen.
long long class_mult_coefficient(const GroupTable& G, const ConjClassPartition& P, int i, int j,
                                 int k);

}  // namespace zlc

#include "zlconst/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

#include "zlconst/errors.hpp"

namespace zlc {

GroupTable build_from_generators(const std::vector<Permutation>& generators, int max_order,
                                 std::string label) {
  if (max_order < 1 || max_order > kMaxOrderCap)
    throw ConstructionError("OrderExceedsCap",
                            "max_order must be in [1, " + std::to_string(kMaxOrderCap) + "]");
  // bring all generators onto the common point set, padding with fixed points
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  std::vector<Permutation> gens = generators;
  for (auto& g : gens) {
    while (g.size() < degree) g.push_back(static_cast<int>(g.size()));
    check_permutation(g);
  }

  std::vector<Permutation> elements;
  std::map<Permutation, Elem> index_of;
  Permutation id = identity_permutation(static_cast<int>(degree));
  elements.push_back(id);
  index_of[id] = 0;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : gens) {
      Permutation w = compose(elements[head], gen);
      if (index_of.count(w)) continue;
      if (static_cast<int>(elements.size()) >= max_order)
        throw ConstructionError("ClosureExceedsLimit",
                                "generated group exceeds " + std::to_string(max_order));
      index_of[w] = static_cast<Elem>(elements.size());
      elements.push_back(std::move(w));
    }
  }

  GroupTable G;
  G.label = label.empty() ? "gen-group" : std::move(label);
  G.order = static_cast<int>(elements.size());
  G.identity = 0;
  G.mul.resize(static_cast<std::size_t>(G.order) * G.order);
  G.inv.resize(G.order);
  for (int a = 0; a < G.order; ++a) {
    for (int b = 0; b < G.order; ++b) {
      G.mul[static_cast<std::size_t>(a) * G.order + b] = index_of.at(compose(elements[a], elements[b]));
    }
  }
  for (int a = 0; a < G.order; ++a) G.inv[a] = index_of.at(inverse(elements[a]));
  validate_group_table(G);
  return G;
}

void validate_group_table(const GroupTable& G) {
  const int n = G.order;
  if (n < 1 || G.mul.size() != static_cast<std::size_t>(n) * n ||
      G.inv.size() != static_cast<std::size_t>(n))
    throw ConstructionError("InvalidGroupTable", "table dimensions do not match order");
  if (G.identity >= n)
    throw ConstructionError("InvalidGroupTable", "identity index out of range");

  // Latin square: each row and column a permutation of 0..n-1
  std::vector<bool> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < n; ++b) {
      Elem v = G.at(a, b);
      if (v >= n || seen[v])
        throw ConstructionError("InvalidGroupTable", "row " + std::to_string(a) +
                                                         " is not a permutation");
      seen[v] = true;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (int a = 0; a < n; ++a) {
      Elem v = G.at(a, b);
      if (seen[v])
        throw ConstructionError("InvalidGroupTable", "column " + std::to_string(b) +
                                                         " is not a permutation");
      seen[v] = true;
    }
  }

  for (int x = 0; x < n; ++x) {
    if (G.at(G.identity, x) != x || G.at(x, G.identity) != x)
      throw ConstructionError("InvalidGroupTable", "identity law fails");
    if (G.inv[x] >= n || G.at(x, G.inv[x]) != G.identity)
      throw ConstructionError("InvalidGroupTable", "inverse law fails");
  }

  auto check_triple = [&](int x, int y, int z) {
    if (G.at(G.at(x, y), z) != G.at(x, G.at(y, z)))
      throw ConstructionError("InvalidGroupTable", "associativity fails");
  };
  if (n <= 256) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) check_triple(x, y, z);
  } else {
    std::mt19937_64 rng(0x5a17c0de);  // fixed seed, reproducible verification
    for (int s = 0; s < 10 * n; ++s)
      check_triple(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                   static_cast<int>(rng() % n));
  }
}

ConjClassPartition conjugacy_classes(const GroupTable& G) {
  const int n = G.order;
  std::vector<int> cls(n, -1);
  std::vector<std::vector<Elem>> classes;
  for (int g = 0; g < n; ++g) {
    if (cls[g] != -1) continue;
    std::vector<Elem> orbit;
    int id = static_cast<int>(classes.size());
    for (int x = 0; x < n; ++x) {
      Elem c = G.at(G.at(x, g), G.inv[x]);
      if (cls[c] == -1) {
        cls[c] = id;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }

  std::vector<int> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
    return classes[a].front() < classes[b].front();
  });

  ConjClassPartition P;
  P.class_of.resize(n);
  for (int rank = 0; rank < static_cast<int>(order.size()); ++rank) {
    auto& members = classes[order[rank]];
    for (Elem e : members) P.class_of[e] = rank;
    P.sizes.push_back(static_cast<int>(members.size()));
    P.reps.push_back(members.front());
    P.classes.push_back(std::move(members));
  }
  return P;
}

namespace {

// closure of a seed set (closed under inverses) inside G
SubgroupHandle close_under_products(const GroupTable& G, const std::vector<Elem>& seeds) {
  SubgroupHandle H;
  H.member.assign(G.order, false);
  std::queue<Elem> todo;
  auto add = [&](Elem e) {
    if (!H.member[e]) {
      H.member[e] = true;
      H.order += 1;
      todo.push(e);
    }
  };
  add(G.identity);
  for (Elem s : seeds) add(s);
  while (!todo.empty()) {
    Elem g = todo.front();
    todo.pop();
    for (Elem s : seeds) add(G.at(g, s));
  }
  return H;
}

}  // namespace

SubgroupHandle derived_subgroup(const GroupTable& G) {
  std::vector<bool> is_seed(G.order, false);
  std::vector<Elem> seeds;
  for (int x = 0; x < G.order; ++x) {
    for (int y = 0; y < G.order; ++y) {
      Elem c = G.at(G.at(G.at(x, y), G.inv[x]), G.inv[y]);
      if (!is_seed[c]) {
        is_seed[c] = true;
        seeds.push_back(c);
      }
    }
  }
  return close_under_products(G, seeds);
}

SubgroupHandle center(const GroupTable& G) {
  SubgroupHandle Z;
  Z.member.assign(G.order, false);
  for (int g = 0; g < G.order; ++g) {
    bool central = true;
    for (int x = 0; x < G.order && central; ++x) central = G.at(g, x) == G.at(x, g);
    if (central) {
      Z.member[g] = true;
      Z.order += 1;
    }
  }
  return Z;
}

bool is_abelian(const GroupTable& G) {
  for (int a = 0; a < G.order; ++a)
    for (int b = a + 1; b < G.order; ++b)
      if (G.at(a, b) != G.at(b, a)) return false;
  return true;
}

long long class_mult_coefficient(const GroupTable& G, const ConjClassPartition& P, int i, int j,
                                 int k) {
  const int r = static_cast<int>(P.classes.size());
  if (i < 0 || j < 0 || k < 0 || i >= r || j >= r || k >= r)
    throw UsageError("IndexOutOfRange", "class index out of range");
  Elem z = P.reps[k];
  long long count = 0;
  for (Elem x : P.classes[i]) {
    Elem y = G.at(G.inv[x], z);  // the unique y with x*y = z
    if (P.class_of[y] == j) ++count;
  }
  return count;
}

}  // namespace zlc

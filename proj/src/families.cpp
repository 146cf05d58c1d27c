#include "zlconst/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "zlconst/errors.hpp"
#include "zlconst/finite_field.hpp"

namespace zlc {

namespace {

// Builds a table from an element-indexed multiplication function. Element 0
// must be the identity under `mul`.
GroupTable make_table(int order, const std::function<int(int, int)>& mul, std::string label,
                      int order_cap) {
  if (order_cap < 1 || order_cap > kMaxOrderCap)
    throw ConstructionError("OrderExceedsCap", "order cap must be in [1, 65535]");
  if (order > order_cap)
    throw ConstructionError("OrderExceedsCap", label + " has order " + std::to_string(order) +
                                                   " > cap " + std::to_string(order_cap));
  GroupTable G;
  G.label = std::move(label);
  G.order = order;
  G.identity = 0;
  G.mul.resize(static_cast<std::size_t>(order) * order);
  G.inv.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int c = mul(a, b);
      G.mul[static_cast<std::size_t>(a) * order + b] = static_cast<Elem>(c);
      if (c == 0) G.inv[a] = static_cast<Elem>(b);
    }
  }
  validate_group_table(G);
  return G;
}

std::string join_orders(const std::vector<int>& orders) {
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(orders[i]);
  }
  return s;
}

}  // namespace

GroupTable dihedral(int n, int order_cap) {
  if (n < 3) throw ConstructionError("ArgumentTooSmall", "dihedral needs n >= 3");
  if (2 * n > order_cap)
    throw ConstructionError("OrderExceedsCap", "dihedral order 2n exceeds cap");
  Permutation rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  GroupTable G = build_from_generators({rot, ref}, 2 * n, "D" + std::to_string(n));
  return G;
}

GroupTable extraspecial_heisenberg(int p, int n, int order_cap) {
  if (!is_prime(p)) throw ConstructionError("NotPrime", std::to_string(p) + " is not prime");
  if (n < 1) throw ConstructionError("ArgumentTooSmall", "extraspecial needs n >= 1");
  long long order = 1;
  for (int i = 0; i < 2 * n + 1; ++i) {
    order *= p;
    if (order > order_cap)
      throw ConstructionError("OrderExceedsCap", "p^(2n+1) exceeds the order cap");
  }

  int q = 1;
  for (int i = 0; i < n; ++i) q *= p;  // p^n

  // index = a + q*b + q*q*c with a, b base-p coefficient vectors of length n
  auto digits = [p, n](int v) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto add_vec = [p, n, &digits](int u, int v) {
    auto du = digits(u), dv = digits(v);
    int out = 0;
    for (int i = n; i-- > 0;) out = out * p + (du[i] + dv[i]) % p;
    return out;
  };
  auto mul = [&](int x, int y) {
    int ax = x % q, bx = (x / q) % q, cx = x / (q * q);
    int ay = y % q, by = (y / q) % q, cy = y / (q * q);
    auto dax = digits(ax), dby = digits(by);
    int dot = 0;
    for (int i = 0; i < n; ++i) dot = (dot + dax[i] * dby[i]) % p;
    int a = add_vec(ax, ay);
    int b = add_vec(bx, by);
    int c = (cx + cy + dot) % p;
    return a + q * b + q * q * c;
  };

  GroupTable G = make_table(static_cast<int>(order), mul,
                            "ES(" + std::to_string(p) + ";" + std::to_string(n) + ")", order_cap);

  // extraspecial conditions: |Z| = |G'| = p, central quotient elementary abelian
  SubgroupHandle Z = center(G);
  SubgroupHandle D = derived_subgroup(G);
  bool ok = Z.order == p && D.order == p;
  for (int x = 0; x < G.order && ok; ++x) {
    int xp = 0;
    for (int i = 0; i < p; ++i) xp = G.at(xp, x);
    ok = Z.contains(xp);  // x^p central => quotient exponent p
    for (int y = 0; y < G.order && ok; ++y) {
      Elem comm = G.at(G.at(G.at(x, y), G.inv[x]), G.inv[y]);
      ok = Z.contains(comm);  // commutators central => quotient abelian
    }
  }
  if (!ok)
    throw ConstructionError("ExtraspecialCheckFailed",
                            "constructed group is not extraspecial (internal error)");
  return G;
}

GroupTable quaternion8() {
  // axes 0=1, 1=i, 2=j, 3=k; element index = 2*axis + (negative ? 1 : 0)
  static constexpr int axis_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_table[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [&](int x, int y) {
    int ux = x / 2, sx = x % 2;
    int uy = y / 2, sy = y % 2;
    int axis = axis_table[ux][uy];
    int sign = sx ^ sy ^ sign_table[ux][uy];
    return 2 * axis + sign;
  };
  return make_table(8, mul, "Q8", 8);
}

GroupTable affine_group(int q, int order_cap) {
  auto pk = prime_power_decompose(q);
  if (!pk || q < 3)
    throw ConstructionError("InvalidFieldOrder",
                            std::to_string(q) + " is not a prime power >= 3");
  FieldSpec F = make_field(pk->first, pk->second);
  const int order = q * (q - 1);
  // index = (a - 1)*q + b over a in F^x (indices 1..q-1), b in F
  auto mul = [&, F](int x, int y) {
    int ax = x / q + 1, bx = x % q;
    int ay = y / q + 1, by = y % q;
    int a = F.mul(ax, ay);
    int b = F.add(F.mul(ax, by), bx);
    return (a - 1) * q + b;
  };
  return make_table(order, mul, "Aff(F" + std::to_string(q) + ")", order_cap);
}

GroupTable a2xb_group(int q, int order_cap) {
  auto pk = prime_power_decompose(q);
  if (!pk) throw ConstructionError("InvalidFieldOrder", std::to_string(q) + " is not a prime power");
  if (pk->first == 2)
    throw ConstructionError("EvenCharacteristic", "a2xb needs odd q, got q = " + std::to_string(q));
  if (q < 5) throw ConstructionError("ArgumentTooSmall", "a2xb needs q >= 5");
  FieldSpec F = make_field(pk->first, pk->second);

  std::vector<int> squares;
  for (int x = 1; x < q; ++x) squares.push_back(F.mul(x, x));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  std::vector<int> pos(q, -1);
  for (std::size_t i = 0; i < squares.size(); ++i) pos[squares[i]] = static_cast<int>(i);

  const int d = static_cast<int>(squares.size());  // (q-1)/2
  const int order = d * q;
  auto mul = [&, F, squares, pos](int x, int y) {
    int ax = squares[x / q], bx = x % q;
    int ay = squares[y / q], by = y % q;
    int a = F.mul(ax, ay);
    int b = F.add(F.mul(ax, by), bx);
    return pos[a] * q + b;
  };
  return make_table(order, mul, "a2xb(F" + std::to_string(q) + ")", order_cap);
}

namespace {

// one abelian group as mixed-radix tuples
struct AbelianIndex {
  std::vector<int> orders;
  int total = 1;

  explicit AbelianIndex(std::vector<int> o) : orders(std::move(o)) {
    for (int n : orders) total *= n;
  }
  std::vector<int> decode(int v) const {
    std::vector<int> t(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      t[i] = v % orders[i];
      v /= orders[i];
    }
    return t;
  }
  int encode(const std::vector<int>& t) const {
    int v = 0;
    for (std::size_t i = orders.size(); i-- > 0;) v = v * orders[i] + t[i];
    return v;
  }
  int add(int a, int b) const {
    auto ta = decode(a), tb = decode(b);
    for (std::size_t i = 0; i < orders.size(); ++i) ta[i] = (ta[i] + tb[i]) % orders[i];
    return encode(ta);
  }
};

}  // namespace

GroupTable frobenius_semidirect(const FrobeniusSpec& spec, int order_cap) {
  if (spec.kernel_orders.empty() || spec.complement_orders.empty())
    throw ConstructionError("ArgumentTooSmall", "kernel and complement must be nontrivial");
  for (int n : spec.kernel_orders)
    if (n < 1) throw ConstructionError("ArgumentTooSmall", "cyclic factor orders must be >= 1");
  for (int n : spec.complement_orders)
    if (n < 1) throw ConstructionError("ArgumentTooSmall", "cyclic factor orders must be >= 1");

  AbelianIndex K(spec.kernel_orders);
  AbelianIndex H(spec.complement_orders);
  const long long k = K.total, h = H.total;
  if (h < 2 || k < 3)
    throw ConstructionError("ArgumentTooSmall", "need |H| >= 2 and |K| >= 3");
  if ((k - 1) % h != 0)
    throw ConstructionError("DivisibilityViolation",
                            "|H| = " + std::to_string(h) + " does not divide |K|-1 = " +
                                std::to_string(k - 1));
  if (k * h > order_cap) throw ConstructionError("OrderExceedsCap", "|K||H| exceeds the order cap");
  if (spec.action.size() != spec.complement_orders.size())
    throw ConstructionError("InvalidAction", "one automorphism per complement generator required");

  // build each generator's automorphism as a permutation table of K
  const int nk = static_cast<int>(spec.kernel_orders.size());
  std::vector<std::vector<int>> gen_auto;
  for (const auto& images : spec.action) {
    if (static_cast<int>(images.size()) != nk)
      throw ConstructionError("InvalidAction", "need an image for every kernel generator");
    std::vector<int> phi(K.total);
    for (int x = 0; x < K.total; ++x) {
      auto tx = K.decode(x);
      std::vector<int> acc(nk, 0);
      for (int jj = 0; jj < nk; ++jj) {
        for (int c = 0; c < nk; ++c)
          acc[c] = (acc[c] + tx[jj] * (images[jj][c] % spec.kernel_orders[c])) %
                   spec.kernel_orders[c];
      }
      phi[x] = K.encode(acc);
    }
    std::vector<bool> seen(K.total, false);
    for (int v : phi) {
      if (seen[v]) throw ConstructionError("InvalidAction", "action image is not an automorphism");
      seen[v] = true;
    }
    gen_auto.push_back(std::move(phi));
  }

  // automorphisms must commute (H is abelian) and have the right order
  auto compose_auto = [&](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> r(K.total);
    for (int x = 0; x < K.total; ++x) r[x] = f[g[x]];
    return r;
  };
  for (std::size_t i = 0; i < gen_auto.size(); ++i) {
    for (std::size_t j = i + 1; j < gen_auto.size(); ++j) {
      if (compose_auto(gen_auto[i], gen_auto[j]) != compose_auto(gen_auto[j], gen_auto[i]))
        throw ConstructionError("InvalidAction", "generator automorphisms do not commute");
    }
    std::vector<int> acc(K.total);
    std::iota(acc.begin(), acc.end(), 0);
    for (int e = 0; e < spec.complement_orders[i]; ++e) acc = compose_auto(gen_auto[i], acc);
    bool ident = true;
    for (int x = 0; x < K.total; ++x) ident = ident && acc[x] == x;
    if (!ident)
      throw ConstructionError("InvalidAction",
                              "automorphism order does not divide the generator order");
  }

  // phi_a for every a in H
  std::vector<std::vector<int>> phi(H.total);
  for (int a = 0; a < H.total; ++a) {
    auto ta = H.decode(a);
    std::vector<int> f(K.total);
    std::iota(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < gen_auto.size(); ++i)
      for (int e = 0; e < ta[i]; ++e) f = compose_auto(gen_auto[i], f);
    phi[a] = std::move(f);
  }

  // fixed-point-freeness, exhaustively
  for (int a = 1; a < H.total; ++a) {
    for (int x = 1; x < K.total; ++x) {
      if (phi[a][x] == x)
        throw ConstructionError("NotFixedPointFree",
                                "complement element fixes a nontrivial kernel element");
    }
  }

  const int order = static_cast<int>(k * h);
  auto mul = [&, phi, K, H](int u, int v) {
    int xu = u / H.total, au = u % H.total;
    int xv = v / H.total, av = v % H.total;
    int x = K.add(xu, phi[au][xv]);
    int a = H.add(au, av);
    return x * H.total + a;
  };
  GroupTable G =
      make_table(order, mul,
                 "Frob(" + join_orders(spec.kernel_orders) + ";" +
                     join_orders(spec.complement_orders) + ")",
                 order_cap);

  // Frobenius class structure: trivial centre, (k-1)/h classes of size h,
  // h-1 classes of size k
  if (center(G).order != 1)
    throw ConstructionError("FrobeniusStructureCheckFailed", "centre is not trivial");
  ConjClassPartition P = conjugacy_classes(G);
  std::vector<int> expected;
  expected.push_back(1);
  for (long long i = 0; i < (k - 1) / h; ++i) expected.push_back(static_cast<int>(h));
  for (long long i = 0; i < h - 1; ++i) expected.push_back(static_cast<int>(k));
  std::vector<int> got = P.sizes;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (got != expected)
    throw ConstructionError("FrobeniusStructureCheckFailed",
                            "conjugacy class sizes do not match the Frobenius pattern");
  return G;
}

GroupTable frobenius_cyclic(int k, int h, int multiplier, int order_cap) {
  if (k < 3 || h < 2) throw ConstructionError("ArgumentTooSmall", "need k >= 3 and h >= 2");
  if ((k - 1) % h != 0)
    throw ConstructionError("DivisibilityViolation",
                            "h = " + std::to_string(h) + " does not divide k-1 = " +
                                std::to_string(k - 1));
  auto order_of = [&](int e) {
    long long v = e % k;
    int ord = 1;
    while (v != 1) {
      v = v * e % k;
      ++ord;
      if (ord > k) return -1;
    }
    return ord;
  };
  auto fixed_point_free = [&](int e) {
    long long v = 1;
    for (int j = 1; j < h; ++j) {
      v = v * e % k;
      if (std::gcd(static_cast<int>(v) - 1 + k, k) != 1) return false;
    }
    return true;
  };
  if (multiplier == 0) {
    for (int e = 2; e < k; ++e) {
      if (order_of(e) == h && fixed_point_free(e)) {
        multiplier = e;
        break;
      }
    }
    if (multiplier == 0)
      throw ConstructionError("NotFixedPointFree",
                              "no fixed-point-free action of Z" + std::to_string(h) + " on Z" +
                                  std::to_string(k));
  }
  FrobeniusSpec spec;
  spec.kernel_orders = {k};
  spec.complement_orders = {h};
  spec.action = {{{multiplier}}};
  return frobenius_semidirect(spec, order_cap);
}

GroupTable cyclic(int n, int order_cap) {
  if (n < 1) throw ConstructionError("ArgumentTooSmall", "cyclic needs n >= 1");
  return make_table(n, [n](int a, int b) { return (a + b) % n; }, "Z" + std::to_string(n),
                    order_cap);
}

GroupTable abelian_product(const std::vector<int>& orders, int order_cap) {
  if (orders.empty()) return cyclic(1, order_cap);
  long long total = 1;
  for (int n : orders) {
    if (n < 1) throw ConstructionError("ArgumentTooSmall", "cyclic factor orders must be >= 1");
    total *= n;
    if (total > order_cap) throw ConstructionError("OrderExceedsCap", "product exceeds the order cap");
  }
  AbelianIndex A(orders);
  return make_table(static_cast<int>(total), [A](int a, int b) { return A.add(a, b); },
                    "Z" + join_orders(orders), order_cap);
}

}  // namespace zlc

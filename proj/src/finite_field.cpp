#include "zlconst/finite_field.hpp"

#include <algorithm>

#include "zlconst/errors.hpp"

namespace zlc {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power_decompose(int q) {
  if (q < 2) return std::nullopt;
  int p = q;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, k);
}

std::vector<int> FieldSpec::decode(int a) const {
  std::vector<int> c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int FieldSpec::encode(const std::vector<int>& c) const {
  int a = 0;
  for (int i = k; i-- > 0;) a = a * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return a;
}

int FieldSpec::add(int a, int b) const {
  if (k == 1) return (a + b) % p;
  auto ca = decode(a), cb = decode(b);
  for (int i = 0; i < k; ++i) ca[i] = (ca[i] + cb[i]) % p;
  return encode(ca);
}

int FieldSpec::neg(int a) const {
  if (k == 1) return (p - a) % p;
  auto c = decode(a);
  for (int& x : c) x = (p - x) % p;
  return encode(c);
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

namespace {

// reduce poly (any degree) mod a monic modulus over F_p, in place
void reduce_mod(std::vector<int>& poly, const std::vector<int>& modulus, int p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  for (int d = static_cast<int>(poly.size()) - 1; d >= k; --d) {
    int c = poly[d];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) {
      int& t = poly[d - k + i];
      t = (t - c * modulus[i]) % p;
      if (t < 0) t += p;
    }
  }
  poly.resize(k);
}

}  // namespace

int FieldSpec::mul(int a, int b) const {
  if (k == 1) return static_cast<int>(static_cast<long long>(a) * b % p);
  auto ca = decode(a), cb = decode(b);
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  }
  reduce_mod(prod, modulus, p);
  return encode(prod);
}

int FieldSpec::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int result = 1;
  int acc = a;
  while (e != 0) {
    if (e & 1) result = mul(result, acc);
    e >>= 1;
    if (e != 0) acc = mul(acc, acc);
  }
  return result;
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw NumericError("DivisionByZero", "inverse of zero in GF(" + std::to_string(q) + ")");
  return pow(a, static_cast<long long>(q) - 2);
}

namespace {

// no-roots test; complete for degrees 2 and 3
bool has_root(const std::vector<int>& poly, const FieldSpec& F) {
  for (int x = 0; x < F.p; ++x) {
    long long v = 0;
    long long xp = 1;
    for (int c : poly) {
      v = (v + c * xp) % F.p;
      xp = xp * x % F.p;
    }
    if (v == 0) return true;
  }
  return false;
}

// trial division by monic polynomials of degree 1..deg/2
bool divisible_by_lower_degree(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int m = 0; m < count; ++m) {
      std::vector<int> divisor(d + 1, 0);
      int t = m;
      for (int i = 0; i < d; ++i) {
        divisor[i] = t % p;
        t /= p;
      }
      divisor[d] = 1;
      std::vector<int> rem = poly;
      for (int dd = static_cast<int>(rem.size()) - 1; dd >= d; --dd) {
        int c = rem[dd];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
          int& r = rem[dd - d + i];
          r = (r - c * divisor[i]) % p;
          if (r < 0) r += p;
        }
      }
      bool zero = std::all_of(rem.begin(), rem.begin() + d, [](int c) { return c == 0; });
      if (zero) return true;
    }
  }
  return false;
}

bool is_irreducible(const std::vector<int>& poly, const FieldSpec& F) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (has_root(poly, F)) return false;
  if (deg <= 3) return true;
  return !divisible_by_lower_degree(poly, F.p);
}

}  // namespace

FieldSpec make_field(int p, int k) {
  if (!is_prime(p)) throw ConstructionError("NotPrime", std::to_string(p) + " is not prime");
  if (k < 1 || k > 6)
    throw ConstructionError("DegreeTooLarge", "extension degree must be 1..6, got " + std::to_string(k));

  FieldSpec F;
  F.p = p;
  F.k = k;
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  F.q = static_cast<int>(q);
  if (k == 1) {
    F.modulus = {0, 1};
    return F;
  }

  // enumerate candidate coefficient tuples (c0, .., c_{k-1}) in ascending
  // lexicographic order, constant term most significant
  std::vector<int> c(k, 0);
  while (true) {
    std::vector<int> poly = c;
    poly.push_back(1);
    if (is_irreducible(poly, F)) {
      F.modulus = std::move(poly);
      return F;
    }
    int i = k - 1;
    while (i >= 0 && c[i] == p - 1) {
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++c[i];
  }
  throw ConstructionError("InvalidFieldOrder",
                          "no irreducible modulus found (unreachable for prime p)");
}

int multiplicative_generator(const FieldSpec& F) {
  if (F.q < 3)
    throw UsageError("ArgumentTooSmall", "multiplicative generator needs q >= 3");
  const int n = F.q - 1;
  std::vector<int> prime_factors;
  int rest = n;
  for (int d = 2; static_cast<long long>(d) * d <= rest; ++d) {
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);

  for (int a = 1; a < F.q; ++a) {
    bool full_order = true;
    for (int ell : prime_factors) {
      if (F.pow(a, n / ell) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) return a;
  }
  throw NumericError("NoGenerator", "multiplicative group is not cyclic (unreachable)");
}

}  // namespace zlc

#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace zlc {

/// GF(p^k) with elements encoded as base-p integers of polynomial
/// coefficients (index 0 is zero, index 1 is one). The modulus is the
/// lexicographically smallest monic irreducible of degree k, coefficients
/// compared from the constant term up, so construction is deterministic.
struct FieldSpec {
  int p = 2;
  int k = 1;
  int q = 2;
  std::vector<int> modulus;  // c0..ck with ck = 1; for k = 1 this is {0, 1}

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws DivisionByZero for a = 0
  int pow(int a, long long e) const;

  std::vector<int> decode(int a) const;         // coefficients c0..c_{k-1}
  int encode(const std::vector<int>& c) const;  // inverse of decode
};

/// Throws NotPrime or DegreeTooLarge (k must be 1..6).
FieldSpec make_field(int p, int k);

/// Smallest-index element of multiplicative order exactly q-1. Requires q >= 3.
int multiplicative_generator(const FieldSpec& F);

bool is_prime(int n);

/// q = p^k with p prime, k >= 1; nullopt when q is not a prime power >= 2.
std::optional<std::pair<int, int>> prime_power_decompose(int q);

}  // namespace zlc

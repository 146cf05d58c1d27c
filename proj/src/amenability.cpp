#include "zlconst/amenability.hpp"

#include <cmath>
#include <complex>

#include "zlconst/errors.hpp"
#include "zlconst/finite_field.hpp"

namespace zlc {

const char* method_name(Method m) {
  switch (m) {
    case Method::general_eq2: return "general_eq2";
    case Method::direct_norm_eq1: return "direct_norm_eq1";
    case Method::two_degree_eq4: return "two_degree_eq4";
    case Method::closed_dihedral: return "closed_dihedral";
    case Method::closed_frobenius: return "closed_frobenius";
    case Method::closed_affine: return "closed_affine";
    case Method::closed_a2xb: return "closed_a2xb";
    case Method::closed_extraspecial: return "closed_extraspecial";
  }
  return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (Method m : {Method::general_eq2, Method::direct_norm_eq1, Method::two_degree_eq4,
                   Method::closed_dihedral, Method::closed_frobenius, Method::closed_affine,
                   Method::closed_a2xb, Method::closed_extraspecial}) {
    if (name == method_name(m)) return m;
  }
  return std::nullopt;
}

AmenabilityReport amzl_general(const CharTable& T) {
  const int r = T.num_classes;
  const double n2 = static_cast<double>(T.group_order) * static_cast<double>(T.group_order);
  double diag = 0.0, off = 0.0;
  for (int c = 0; c < r; ++c) {
    for (int d = 0; d < r; ++d) {
      std::complex<double> s = 0;
      for (int i = 0; i < r; ++i) {
        double d2 = static_cast<double>(T.degrees[i]) * T.degrees[i];
        s += d2 * T.at(i, c) * std::conj(T.at(i, d));
      }
      // no zero-snapping: off-diagonal sums vanish by column orthogonality
      // in exact arithmetic, and residual noise here is what the
      // cross-checks are meant to see
      double term = std::abs(s) * T.class_sizes[c] * T.class_sizes[d] / n2;
      (c == d ? diag : off) += term;
    }
  }
  AmenabilityReport rep;
  rep.method = Method::general_eq2;
  rep.am_diag = diag;
  rep.am_off = off;
  rep.value_float = diag + off;
  return rep;
}

double amzl_direct_norm(const CharTable& T, const ConjClassPartition& P) {
  const int r = T.num_classes;
  const long long n = T.group_order;
  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  double total = 0.0;
  for (long long x = 0; x < n; ++x) {
    const int cx = P.class_of[static_cast<std::size_t>(x)];
    for (long long y = 0; y < n; ++y) {
      const int cy = P.class_of[static_cast<std::size_t>(y)];
      std::complex<double> m = 0;
      for (int i = 0; i < r; ++i) {
        double d2 = static_cast<double>(T.degrees[i]) * T.degrees[i];
        m += d2 * inv_n2 * T.at(i, cx) * std::conj(T.at(i, cy));
      }
      total += std::abs(m);
    }
  }
  return total;
}

double lemma_linear_block_norm(const CharTable& T) {
  const int r = T.num_classes;
  const double n2 = static_cast<double>(T.group_order) * static_cast<double>(T.group_order);
  double total = 0.0;
  for (int c = 0; c < r; ++c) {
    for (int d = 0; d < r; ++d) {
      std::complex<double> s = 0;
      for (int i = 0; i < r; ++i) {
        if (T.degrees[i] != 1) continue;
        s += T.at(i, c) * std::conj(T.at(i, d));
      }
      total += std::abs(s) * T.class_sizes[c] * T.class_sizes[d] / n2;
    }
  }
  return total;
}

Rational amzl_two_degree(long long order, long long derived_order, int m,
                         const std::vector<int>& class_sizes) {
  if (m < 2) throw UsageError("InvalidClassData", "non-linear degree m must be >= 2");
  if (order < 1 || derived_order < 1 || order % derived_order != 0)
    throw UsageError("InvalidClassData", "derived subgroup order must divide the group order");
  long long size_sum = 0;
  Rational sq_sum = 0;
  for (int s : class_sizes) {
    if (s < 1) throw UsageError("InvalidClassData", "class sizes must be positive");
    size_sum += s;
    sq_sum += Rational(static_cast<long long>(s) * s);
  }
  if (size_sum != order)
    throw UsageError("InvalidClassData", "class sizes do not sum to the group order");
  Rational m2{static_cast<long long>(m) * m};
  return Rational(1) +
         Rational(2) * (m2 - Rational(1)) *
             (Rational(1) - sq_sum / Rational(order * derived_order));
}

Rational closed_form_dihedral(int n) {
  if (n < 3) throw ConstructionError("ArgumentTooSmall", "dihedral closed form needs n >= 3");
  Rational base = n % 2 == 0 ? Rational(1) - Rational(2, n) : Rational(1) - Rational(1, n);
  return Rational(1) + Rational(3) * base * base;
}

Rational closed_form_frobenius(int h, long long k) {
  if (h < 2 || k < 3)
    throw ConstructionError("ArgumentTooSmall", "frobenius closed form needs h >= 2, k >= 3");
  if ((k - 1) % h != 0)
    throw ConstructionError("DivisibilityViolation",
                            "h = " + std::to_string(h) + " does not divide k-1 = " +
                                std::to_string(k - 1));
  Rational hh{h};
  Rational kk{k};
  return Rational(1) + Rational(2) * ((hh * hh - Rational(1)) / hh) *
                           (Rational(1) - Rational(h - 1) / kk) * (Rational(1) - Rational(1) / kk);
}

Rational closed_form_affine(int q) {
  if (q < 3 || !prime_power_decompose(q))
    throw ConstructionError("InvalidFieldOrder",
                            std::to_string(q) + " is not a prime power >= 3");
  return Rational(5) - Rational(8, q);
}

Rational closed_form_a2xb(int q) {
  auto pk = prime_power_decompose(q);
  if (!pk || pk->first == 2)
    throw ConstructionError("EvenCharacteristic",
                            "a2xb closed form needs an odd prime power, got " + std::to_string(q));
  if (q < 5) throw ConstructionError("ArgumentTooSmall", "a2xb closed form needs q >= 5");
  return Rational(1) +
         Rational(q + 1, 2) * (Rational(1) - Rational(9) / Rational(static_cast<long long>(q) * q));
}

Rational closed_form_extraspecial(int p, int n) {
  if (!is_prime(p)) throw ConstructionError("NotPrime", std::to_string(p) + " is not prime");
  if (n < 1) throw ConstructionError("ArgumentTooSmall", "extraspecial closed form needs n >= 1");
  Rational p2n = Rational::pow(Rational(p), 2 * n);
  return Rational(1) +
         Rational(2) * (Rational(1) - Rational(1) / p2n) * (Rational(1) - Rational(1, p));
}

std::vector<ScanRow> frobenius_min_scan(int h_max, int k_max) {
  if (h_max < 3 || k_max < 3)
    throw ConstructionError("ArgumentTooSmall", "scan bounds must be >= 3");
  std::vector<ScanRow> rows;
  const Rational floor_value{2, 3};
  std::size_t min_index = 0;
  for (int h = 2; h <= h_max; ++h) {
    Rational prev;
    bool have_prev = false;
    for (int k = h + 1; k <= k_max; ++k) {
      if ((k - 1) % h != 0) continue;
      Rational f = (closed_form_frobenius(h, k) - Rational(1)) / Rational(2);
      if (f < floor_value || (f == floor_value && !(h == 2 && k == 3)))
        throw NumericError("ScanInvariantViolation",
                           "F(k, h) dips to the floor away from (2, 3)");
      if (have_prev && !(prev < f))
        throw NumericError("ScanInvariantViolation", "F(., h) is not strictly increasing in k");
      prev = f;
      have_prev = true;
      rows.push_back({h, k, f, false});
      if (rows[min_index].value > f || rows.size() == 1) min_index = rows.size() - 1;
    }
  }
  if (!rows.empty()) rows[min_index].is_min = true;
  return rows;
}

}  // namespace zlc

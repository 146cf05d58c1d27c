#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zlconst/char_table.hpp"
#include "zlconst/group.hpp"
#include "zlconst/rational.hpp"

namespace zlc {

/// How a constant was computed. The names are the stable tags used in
/// JSON/CSV output and on the --methods flag.
enum class Method {
  general_eq2,
  direct_norm_eq1,
  two_degree_eq4,
  closed_dihedral,
  closed_frobenius,
  closed_affine,
  closed_a2xb,
  closed_extraspecial,
};

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// One computed amenability constant. `value_exact` is present for the
/// rational routes; `am_diag`/`am_off` decompose the class double sum and
/// are filled by the general formula (where value = diag + off).
struct AmenabilityReport {
  Method method = Method::general_eq2;
  double value_float = 0.0;
  std::optional<Rational> value_exact;
  std::optional<double> am_diag;
  std::optional<double> am_off;
  std::optional<double> residual_vs_oracle;
};

/// Amenability constant of the centre of the group algebra from the full
/// character table:
///   (1/|G|^2) sum_{C,D} | sum_chi d^2 chi(C) conj(chi(D)) | |C| |D|,
/// split into the C = D (diagonal) and C != D (off-diagonal) parts.
AmenabilityReport amzl_general(const CharTable& T);

/// Brute-force oracle: builds the diagonal element
///   M(x, y) = sum_chi (d/|G|)^2 chi(cls x) conj(chi(cls y))
/// pointwise over G x G and returns its l1 norm. Quadratic in |G|; kept
/// deliberately element-wise so it is an independent check of the class
/// double sum above.
double amzl_direct_norm(const CharTable& T, const ConjClassPartition& P);

/// The same double sum restricted to the degree-1 rows; equals 1 for every
/// finite group, which makes it a sharp sanity check of any computed table.
double lemma_linear_block_norm(const CharTable& T);

/// Exact constant for a group with two character degrees:
///   1 + 2(m^2 - 1) (1 - sum |C|^2 / (|G| |G'|)).
/// Needs only the class sizes, |G'| and the common non-linear degree m.
Rational amzl_two_degree(long long order, long long derived_order, int m,
                         const std::vector<int>& class_sizes);

/// Closed forms per family, all exact.
Rational closed_form_dihedral(int n);                 // even: 1 + 3(1-2/n)^2, odd: 1 + 3(1-1/n)^2
Rational closed_form_frobenius(int h, long long k);   // 1 + 2 (h^2-1)/h (1-(h-1)/k)(1-1/k)
Rational closed_form_affine(int q);                   // 5 - 8/q
Rational closed_form_a2xb(int q);                     // 1 + (q+1)/2 (1 - 9/q^2)
Rational closed_form_extraspecial(int p, int n);      // 1 + 2(1-p^(-2n))(1-1/p)

/// F(k, h) = (AM - 1)/2 for the abelian-by-abelian Frobenius family,
/// evaluated over all admissible pairs (h >= 2, k >= h+1, h | k-1) within
/// the bounds. The unique minimum 2/3 at (h, k) = (2, 3) and strict growth
/// in k for fixed h are asserted during the scan.
struct ScanRow {
  int h = 0;
  int k = 0;
  Rational value;
  bool is_min = false;
};
std::vector<ScanRow> frobenius_min_scan(int h_max, int k_max);

}  // namespace zlc

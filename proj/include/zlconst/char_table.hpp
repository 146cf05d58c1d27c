#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "zlconst/group.hpp"

namespace zlc {

/// Complex character table: one row per irreducible character, one column
/// per conjugacy class (column 0 = identity class). Rows are sorted by
/// (degree, then column-wise on values rounded to 1e-6, descending real
/// then imaginary part), which makes the table independent of the seed.
struct CharTable {
  int num_classes = 0;
  long long group_order = 0;
  std::vector<int> class_sizes;
  std::vector<int> degrees;
  std::vector<std::complex<double>> values;  // row-major num_classes x num_classes

  std::complex<double> at(int chi, int cls) const {
    return values[static_cast<std::size_t>(chi) * num_classes + cls];
  }
};

/// Numeric tolerances of the engine. Orthogonality residuals scale with the
/// group order; the eigenvalue-gap and degree-rounding thresholds are
/// absolute.
inline constexpr double kEigenGapThreshold = 1e-7;
inline constexpr double kDegreeRoundTolerance = 1e-6;
inline constexpr double kOrthogonalityTolerancePerOrder = 1e-8;
inline constexpr int kMaxSplitAttempts = 16;

/// Character table by the class-matrix eigenvector method: form the class
/// multiplication matrices, take a random real combination (coefficients
/// drawn from `seed`), and read central characters off its eigenvectors.
/// A repeated eigenvalue triggers a redraw with a derived seed, up to 16
/// attempts (then DegenerateSplitFailure). The result is validated against
/// the Schur orthogonality relations and the linear-character count
/// (OrthogonalityFailure / InconsistentWithDerivedSubgroup on failure).
CharTable character_table(const GroupTable& G, const ConjClassPartition& P, std::uint64_t seed);

/// Table-internal invariants: degrees on column 0, sum of squared degrees,
/// row and column orthogonality. Throws OrthogonalityFailure.
void validate_char_table(const CharTable& T);

struct OrthogonalityResiduals {
  double row_max = 0.0;
  double col_max = 0.0;
  double degree_col_max = 0.0;
};
OrthogonalityResiduals char_table_residuals(const CharTable& T);

/// Sorted degree multiset.
std::vector<int> character_degrees(const CharTable& T);

int linear_character_count(const CharTable& T);

/// Cross-check: the number of degree-1 rows must equal |G| / |G'|.
/// Throws InconsistentWithDerivedSubgroup.
void check_linear_count(const CharTable& T, const GroupTable& G);

/// Common degree m of all non-linear characters, when the group is
/// non-abelian and such a common degree exists; otherwise empty.
std::optional<int> two_degree_profile(const CharTable& T);

}  // namespace zlc

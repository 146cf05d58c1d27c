#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zlconst/amenability.hpp"
#include "zlconst/families.hpp"

namespace zlc {

enum class FamilyKind {
  none,  // e.g. built from a generator file
  dihedral,
  cyclic,
  abelian,
  quaternion8,
  extraspecial,
  affine,
  a2xb,
  frobenius,
};

const char* family_name(FamilyKind k);
std::optional<FamilyKind> family_from_name(const std::string& name);

/// A family together with its parameters; enough to rebuild the group and
/// to pick the closed form that applies to it.
struct FamilyInstance {
  FamilyKind kind = FamilyKind::none;
  int n = 0;                // dihedral / cyclic / extraspecial exponent
  int p = 0;                // extraspecial prime
  int q = 0;                // affine / a2xb field order
  int h = 0;                // frobenius complement order
  int k = 0;                // frobenius kernel order
  int multiplier = 0;       // frobenius action (0 = auto)
  std::vector<int> orders;  // abelian factor orders

  std::string describe() const;
};

GroupTable build_family(const FamilyInstance& fam, int order_cap = kDefaultOrderCap);

/// The closed form matching a family, when one exists (the quaternion group
/// uses the extraspecial form with p = 2, n = 1).
std::optional<std::pair<Method, Rational>> closed_form_for(const FamilyInstance& fam);

struct PipelineOptions {
  std::uint64_t seed = 1;
  double tolerance = 1e-9;          // cross-check tolerance
  long long direct_norm_cap = 1024; // the oracle is quadratic in |G|
  int order_cap = kDefaultOrderCap;
  std::set<Method> methods;         // empty = every applicable method
};

struct GroupSummary {
  std::string label;
  int order = 0;
  int num_classes = 0;
  std::vector<int> class_sizes;
  std::vector<int> degrees;
  int linear_count = 0;
  long long derived_order = 0;
  bool abelian = false;
  std::optional<int> two_degree_m;
};

struct ComputeResult {
  GroupSummary group;
  std::vector<AmenabilityReport> reports;
  double max_float_residual = 0.0;
  bool exact_consistent = true;
  double tolerance = 1e-9;

  bool pass() const { return exact_consistent && max_float_residual <= tolerance; }
};

/// Runs every requested (and applicable) method on one group and
/// cross-checks the results against each other. For abelian groups the
/// general report also carries the exact value 1.
ComputeResult compute_reports(const GroupTable& G, const FamilyInstance& fam,
                              const PipelineOptions& opts);

}  // namespace zlc

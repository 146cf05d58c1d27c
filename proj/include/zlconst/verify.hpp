#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zlconst/pipeline.hpp"

namespace zlc {

/// One non-abelian group of the verification corpus, paired with the exact
/// closed-form value its family predicts.
struct CorpusEntry {
  FamilyInstance family;
  Rational expected_exact;
};

/// The standard corpus: dihedral n = 3..12, affine q in {3,4,5,7,8,9,11,13},
/// a2xb q in {5,7,9,11,13}, extraspecial (2,1), (2,2), (3,1), (5,1) plus the
/// quaternion group, and the Frobenius products Z7:Z3, Z11:Z5, Z13:Z4.
std::vector<CorpusEntry> acceptance_corpus();

/// Abelian controls Z4, Z2xZ2, Z6 (constant exactly 1).
std::vector<FamilyInstance> abelian_controls();

struct CheckResult {
  std::string id;
  std::string label;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::string only;               // substring filter on check ids
  bool inject_corruption = false; // test hook: corrupt one character table
};

/// Runs the full verification corpus; one result per acceptance check.
std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& opts);

/// The five-row family summary (symbolic columns plus the exact minimum of
/// the constant minus 1 within each family), each minimum re-verified
/// against the character-table pipeline on the family's smallest instance.
struct Figure1Row {
  std::string family;
  std::string order_sym;
  std::string linear_sym;
  std::string degree_sym;
  std::string min_at;
  Rational min_value;   // AM - 1 at the family minimum
  bool verified = false;
  double residual = 0.0;
};

struct Figure1 {
  std::vector<Figure1Row> rows;
  std::string note;
};

Figure1 figure1_table(std::uint64_t seed);

}  // namespace zlc

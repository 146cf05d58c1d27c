#include "zlconst/pipeline.hpp"

#include <cmath>

#include "zlconst/errors.hpp"

namespace zlc {

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::none: return "none";
    case FamilyKind::dihedral: return "dihedral";
    case FamilyKind::cyclic: return "cyclic";
    case FamilyKind::abelian: return "abelian";
    case FamilyKind::quaternion8: return "quaternion8";
    case FamilyKind::extraspecial: return "extraspecial";
    case FamilyKind::affine: return "affine";
    case FamilyKind::a2xb: return "a2xb";
    case FamilyKind::frobenius: return "frobenius";
  }
  return "none";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
  for (FamilyKind k : {FamilyKind::dihedral, FamilyKind::cyclic, FamilyKind::abelian,
                       FamilyKind::quaternion8, FamilyKind::extraspecial, FamilyKind::affine,
                       FamilyKind::a2xb, FamilyKind::frobenius}) {
    if (name == family_name(k)) return k;
  }
  return std::nullopt;
}

std::string FamilyInstance::describe() const {
  switch (kind) {
    case FamilyKind::dihedral: return "dihedral n=" + std::to_string(n);
    case FamilyKind::cyclic: return "cyclic n=" + std::to_string(n);
    case FamilyKind::abelian: {
      std::string s = "abelian";
      for (int o : orders) s += " " + std::to_string(o);
      return s;
    }
    case FamilyKind::quaternion8: return "quaternion8";
    case FamilyKind::extraspecial:
      return "extraspecial p=" + std::to_string(p) + " n=" + std::to_string(n);
    case FamilyKind::affine: return "affine q=" + std::to_string(q);
    case FamilyKind::a2xb: return "a2xb q=" + std::to_string(q);
    case FamilyKind::frobenius:
      return "frobenius k=" + std::to_string(k) + " h=" + std::to_string(h);
    case FamilyKind::none: return "generators";
  }
  return "?";
}

GroupTable build_family(const FamilyInstance& fam, int order_cap) {
  switch (fam.kind) {
    case FamilyKind::dihedral: return dihedral(fam.n, order_cap);
    case FamilyKind::cyclic: return cyclic(fam.n, order_cap);
    case FamilyKind::abelian: return abelian_product(fam.orders, order_cap);
    case FamilyKind::quaternion8: return quaternion8();
    case FamilyKind::extraspecial: return extraspecial_heisenberg(fam.p, fam.n, order_cap);
    case FamilyKind::affine: return affine_group(fam.q, order_cap);
    case FamilyKind::a2xb: return a2xb_group(fam.q, order_cap);
    case FamilyKind::frobenius:
      return frobenius_cyclic(fam.k, fam.h, fam.multiplier, order_cap);
    case FamilyKind::none: break;
  }
  throw UsageError("InvalidFamily", "no family to build");
}

std::optional<std::pair<Method, Rational>> closed_form_for(const FamilyInstance& fam) {
  switch (fam.kind) {
    case FamilyKind::dihedral:
      return std::make_pair(Method::closed_dihedral, closed_form_dihedral(fam.n));
    case FamilyKind::quaternion8:
      return std::make_pair(Method::closed_extraspecial, closed_form_extraspecial(2, 1));
    case FamilyKind::extraspecial:
      return std::make_pair(Method::closed_extraspecial, closed_form_extraspecial(fam.p, fam.n));
    case FamilyKind::affine:
      return std::make_pair(Method::closed_affine, closed_form_affine(fam.q));
    case FamilyKind::a2xb:
      return std::make_pair(Method::closed_a2xb, closed_form_a2xb(fam.q));
    case FamilyKind::frobenius:
      return std::make_pair(Method::closed_frobenius, closed_form_frobenius(fam.h, fam.k));
    default: return std::nullopt;
  }
}

ComputeResult compute_reports(const GroupTable& G, const FamilyInstance& fam,
                              const PipelineOptions& opts) {
  auto wanted = [&](Method m) { return opts.methods.empty() || opts.methods.count(m) > 0; };

  ComputeResult result;
  result.tolerance = opts.tolerance;

  const ConjClassPartition P = conjugacy_classes(G);
  const SubgroupHandle D = derived_subgroup(G);

  result.group.label = G.label;
  result.group.order = G.order;
  result.group.num_classes = static_cast<int>(P.classes.size());
  result.group.class_sizes = P.sizes;
  result.group.derived_order = D.order;
  result.group.abelian = D.order == 1;

  const bool need_table = wanted(Method::general_eq2) || wanted(Method::direct_norm_eq1) ||
                          wanted(Method::two_degree_eq4);
  std::optional<CharTable> table;
  if (need_table) {
    table = character_table(G, P, opts.seed);
    result.group.degrees = character_degrees(*table);
    result.group.linear_count = linear_character_count(*table);
    result.group.two_degree_m = two_degree_profile(*table);
  }

  if (wanted(Method::general_eq2) && table) {
    AmenabilityReport rep = amzl_general(*table);
    if (result.group.abelian) rep.value_exact = Rational(1);
    result.reports.push_back(std::move(rep));
  }
  if (wanted(Method::direct_norm_eq1) && table && G.order <= opts.direct_norm_cap) {
    AmenabilityReport rep;
    rep.method = Method::direct_norm_eq1;
    rep.value_float = amzl_direct_norm(*table, P);
    result.reports.push_back(std::move(rep));
  }
  if (wanted(Method::two_degree_eq4) && table && result.group.two_degree_m) {
    AmenabilityReport rep;
    rep.method = Method::two_degree_eq4;
    rep.value_exact = amzl_two_degree(G.order, D.order, *result.group.two_degree_m, P.sizes);
    rep.value_float = rep.value_exact->to_double();
    result.reports.push_back(std::move(rep));
  }
  if (auto closed = closed_form_for(fam); closed && wanted(closed->first)) {
    AmenabilityReport rep;
    rep.method = closed->first;
    rep.value_exact = closed->second;
    rep.value_float = rep.value_exact->to_double();
    result.reports.push_back(std::move(rep));
  }

  if (result.reports.empty())
    throw UsageError("NoApplicableMethod", "none of the requested methods applies to this group");

  // cross-checks: pairwise float residuals, exact routes must agree exactly
  const AmenabilityReport* oracle = nullptr;
  for (const auto& rep : result.reports)
    if (rep.method == Method::direct_norm_eq1) oracle = &rep;
  for (auto& rep : result.reports) {
    if (oracle && rep.method != Method::direct_norm_eq1)
      rep.residual_vs_oracle = std::abs(rep.value_float - oracle->value_float);
  }
  const std::optional<Rational>* first_exact = nullptr;
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    for (std::size_t j = i + 1; j < result.reports.size(); ++j) {
      result.max_float_residual =
          std::max(result.max_float_residual,
                   std::abs(result.reports[i].value_float - result.reports[j].value_float));
    }
    if (result.reports[i].value_exact) {
      if (first_exact && **first_exact != *result.reports[i].value_exact)
        result.exact_consistent = false;
      if (!first_exact) first_exact = &result.reports[i].value_exact;
    }
  }
  return result;
}

}  // namespace zlc

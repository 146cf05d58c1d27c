#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zlconst/amenability.hpp"
#include "zlconst/char_table.hpp"
#include "zlconst/errors.hpp"
#include "zlconst/families.hpp"
#include "zlconst/group.hpp"
#include "zlconst/perm.hpp"
#include "zlconst/pipeline.hpp"
#include "zlconst/verify.hpp"

namespace py = pybind11;
using namespace zlc;

namespace {

py::object to_fraction(const Rational& r) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.str());  // "num/den" parses exactly
}

py::object opt_fraction(const std::optional<Rational>& r) {
  return r ? to_fraction(*r) : py::object(py::none());
}

py::dict report_to_dict(const AmenabilityReport& rep) {
  py::dict d;
  d["method"] = method_name(rep.method);
  d["value_float"] = rep.value_float;
  d["value_exact"] = opt_fraction(rep.value_exact);
  d["am_diag"] = rep.am_diag ? py::object(py::float_(*rep.am_diag)) : py::object(py::none());
  d["am_off"] = rep.am_off ? py::object(py::float_(*rep.am_off)) : py::object(py::none());
  d["residual_vs_oracle"] = rep.residual_vs_oracle
                                ? py::object(py::float_(*rep.residual_vs_oracle))
                                : py::object(py::none());
  return d;
}

std::vector<std::vector<std::complex<double>>> table_rows(const CharTable& T) {
  std::vector<std::vector<std::complex<double>>> rows(T.num_classes);
  for (int i = 0; i < T.num_classes; ++i) {
    rows[i].resize(T.num_classes);
    for (int j = 0; j < T.num_classes; ++j) rows[i][j] = T.at(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "amenability constants of centres of finite group algebras";

  py::register_exception<UsageError>(m, "ZlcUsageError");
  py::register_exception<ConstructionError>(m, "ZlcConstructionError");
  py::register_exception<NumericError>(m, "ZlcNumericError");

  py::class_<GroupTable>(m, "GroupTable")
      .def_readonly("order", &GroupTable::order)
      .def_readonly("label", &GroupTable::label)
      .def("mul", [](const GroupTable& G, int a, int b) { return int(G.at(a, b)); })
      .def("inverse", [](const GroupTable& G, int a) { return int(G.inv.at(a)); })
      .def("__repr__",
           [](const GroupTable& G) {
             return "<GroupTable " + G.label + " order " + std::to_string(G.order) + ">";
           });

  py::class_<ConjClassPartition>(m, "ConjClassPartition")
      .def_readonly("sizes", &ConjClassPartition::sizes)
      .def_readonly("class_of", &ConjClassPartition::class_of)
      .def_property_readonly("num_classes", [](const ConjClassPartition& P) {
        return static_cast<int>(P.classes.size());
      });

  py::class_<CharTable>(m, "CharTable")
      .def_readonly("num_classes", &CharTable::num_classes)
      .def_readonly("group_order", &CharTable::group_order)
      .def_readonly("class_sizes", &CharTable::class_sizes)
      .def_readonly("degrees", &CharTable::degrees)
      .def_property_readonly("values", &table_rows);

  // constructors
  m.def("dihedral", &dihedral, py::arg("n"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("cyclic", &cyclic, py::arg("n"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("abelian_product", &abelian_product, py::arg("orders"),
        py::arg("order_cap") = kDefaultOrderCap);
  m.def("quaternion8", &quaternion8);
  m.def("extraspecial_heisenberg", &extraspecial_heisenberg, py::arg("p"), py::arg("n"),
        py::arg("order_cap") = kDefaultOrderCap);
  m.def("affine_group", &affine_group, py::arg("q"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("a2xb_group", &a2xb_group, py::arg("q"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("frobenius_cyclic", &frobenius_cyclic, py::arg("k"), py::arg("h"),
        py::arg("multiplier") = 0, py::arg("order_cap") = kDefaultOrderCap);
  m.def("build_from_generators", &build_from_generators, py::arg("generators"),
        py::arg("max_order"), py::arg("label") = std::string());
  m.def("parse_generators", &parse_generator_text, py::arg("text"));

  // structure
  m.def("conjugacy_classes", &conjugacy_classes);
  m.def("derived_subgroup_order", [](const GroupTable& G) { return derived_subgroup(G).order; });
  m.def("center_order", [](const GroupTable& G) { return center(G).order; });
  m.def("is_abelian", &is_abelian);
  m.def("class_mult_coefficient", &class_mult_coefficient);

  // character table and constants
  m.def("character_table", &character_table, py::arg("group"), py::arg("classes"),
        py::arg("seed") = 1);
  m.def("character_degrees", &character_degrees);
  m.def("linear_character_count", &linear_character_count);
  m.def("two_degree_profile", [](const CharTable& T) -> py::object {
    auto m2 = two_degree_profile(T);
    return m2 ? py::object(py::int_(*m2)) : py::object(py::none());
  });
  m.def("amzl_general", [](const CharTable& T) { return report_to_dict(amzl_general(T)); });
  m.def("amzl_direct_norm", &amzl_direct_norm);
  m.def("lemma_linear_block_norm", &lemma_linear_block_norm);
  m.def("amzl_two_degree",
        [](long long order, long long derived_order, int mdeg, const std::vector<int>& sizes) {
          return to_fraction(amzl_two_degree(order, derived_order, mdeg, sizes));
        });
  m.def("closed_form_dihedral", [](int n) { return to_fraction(closed_form_dihedral(n)); });
  m.def("closed_form_frobenius",
        [](int h, long long k) { return to_fraction(closed_form_frobenius(h, k)); });
  m.def("closed_form_affine", [](int q) { return to_fraction(closed_form_affine(q)); });
  m.def("closed_form_a2xb", [](int q) { return to_fraction(closed_form_a2xb(q)); });
  m.def("closed_form_extraspecial",
        [](int p, int n) { return to_fraction(closed_form_extraspecial(p, n)); });
  m.def("frobenius_min_scan", [](int h_max, int k_max) {
    py::list out;
    for (const auto& row : frobenius_min_scan(h_max, k_max))
      out.append(py::make_tuple(row.h, row.k, to_fraction(row.value), row.is_min));
    return out;
  });

  // verification corpus
  m.def(
      "run_acceptance_checks",
      [](std::uint64_t seed, const std::string& only) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.only = only;
        py::list out;
        for (const auto& r : run_acceptance_checks(opts)) {
          py::dict d;
          d["id"] = r.id;
          d["label"] = r.label;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("only") = std::string());
  m.def("figure1_minima", [](std::uint64_t seed) {
    py::list out;
    for (const auto& row : figure1_table(seed).rows)
      out.append(py::make_tuple(row.family, to_fraction(row.min_value), row.verified));
    return out;
  });
}

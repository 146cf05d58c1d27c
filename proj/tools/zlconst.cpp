// zlconst: compute amenability constants of centres of finite group algebras.
//
// Subcommands: compute (one group, all applicable methods), sweep (a family
// over a parameter range), verify (the full verification corpus), figure1
// (the family summary table). Exit codes: 0 success, 1 usage error,
// 2 construction error, 3 numeric or cross-check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zlconst/errors.hpp"
#include "zlconst/finite_field.hpp"
#include "zlconst/perm.hpp"
#include "zlconst/pipeline.hpp"
#include "zlconst/verify.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConstruction = 2;
constexpr int kExitNumeric = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ZLCONST_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw zlc::UsageError("InvalidSeed", "ZLCONST_SEED is not an integer");
    }
  }
  return 1;
}

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_double(*v) : "-"; }

json json_opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

struct CommonOptions {
  std::string format = "text";
  std::uint64_t seed = default_seed();
  int order_cap = zlc::kDefaultOrderCap;
  double tolerance = 1e-9;
  long long direct_norm_cap = 1024;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->set_help_flag("--help", "Print help");  // frees -h for the Frobenius flag
  cmd->add_option("--format", opts.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--seed", opts.seed, "Seed for the character-table engine");
  cmd->add_option("--order-cap", opts.order_cap, "Reject groups larger than this");
  cmd->add_option("--tolerance", opts.tolerance, "Cross-check tolerance");
  cmd->add_option("--direct-norm-cap", opts.direct_norm_cap,
                  "Largest order on which the direct-norm oracle runs");
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  CommonOptions common;
  std::string family;
  std::string generators_path;
  std::string label;
  std::string methods = "all";
  int n = 0, p = 0, q = 0, h = 0, k = 0, multiplier = 0;
  std::vector<int> orders;
};

zlc::FamilyInstance family_from_args(const ComputeArgs& args) {
  auto kind = zlc::family_from_name(args.family);
  if (!kind) throw zlc::UsageError("InvalidFamily", "unknown family '" + args.family + "'");
  zlc::FamilyInstance fam;
  fam.kind = *kind;
  fam.n = args.n;
  fam.p = args.p;
  fam.q = args.q;
  fam.h = args.h;
  fam.k = args.k;
  fam.multiplier = args.multiplier;
  fam.orders = args.orders;
  auto require = [&](bool present, const char* what) {
    if (!present)
      throw zlc::UsageError("MissingParameter",
                            std::string(what) + " is required for family " + args.family);
  };
  switch (*kind) {
    case zlc::FamilyKind::dihedral:
    case zlc::FamilyKind::cyclic: require(args.n > 0, "--n"); break;
    case zlc::FamilyKind::abelian: require(!args.orders.empty(), "--orders"); break;
    case zlc::FamilyKind::extraspecial:
      require(args.p > 0, "--p");
      require(args.n > 0, "--n");
      break;
    case zlc::FamilyKind::affine:
    case zlc::FamilyKind::a2xb: require(args.q > 0, "--q"); break;
    case zlc::FamilyKind::frobenius:
      require(args.k > 0, "--k");
      require(args.h > 0, "--h");
      break;
    default: break;
  }
  return fam;
}

std::set<zlc::Method> parse_methods(const std::string& spec) {
  std::set<zlc::Method> methods;
  if (spec == "all" || spec.empty()) return methods;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto m = zlc::method_from_name(name);
    if (!m) throw zlc::UsageError("InvalidMethod", "unknown method '" + name + "'");
    methods.insert(*m);
  }
  return methods;
}

json compute_to_json(const zlc::ComputeResult& result, std::uint64_t seed) {
  json j;
  j["command"] = "compute";
  j["seed"] = seed;
  json group;
  group["label"] = result.group.label;
  group["order"] = result.group.order;
  group["num_classes"] = result.group.num_classes;
  group["class_sizes"] = result.group.class_sizes;
  group["degrees"] = result.group.degrees;
  group["linear_characters"] = result.group.linear_count;
  group["derived_order"] = result.group.derived_order;
  group["abelian"] = result.group.abelian;
  group["two_degree_m"] =
      result.group.two_degree_m ? json(*result.group.two_degree_m) : json(nullptr);
  j["group"] = group;
  json reports = json::array();
  for (const auto& rep : result.reports) {
    json r;
    r["method"] = zlc::method_name(rep.method);
    r["value_float"] = rep.value_float;
    r["value_exact"] = rep.value_exact ? json(rep.value_exact->str()) : json(nullptr);
    r["am_diag"] = json_opt(rep.am_diag);
    r["am_off"] = json_opt(rep.am_off);
    r["residual_vs_oracle"] = json_opt(rep.residual_vs_oracle);
    reports.push_back(std::move(r));
  }
  j["reports"] = reports;
  j["cross_check"] = {{"max_float_residual", result.max_float_residual},
                      {"tolerance", result.tolerance},
                      {"exact_routes_consistent", result.exact_consistent},
                      {"pass", result.pass()}};
  return j;
}

void render_compute_text(const zlc::ComputeResult& result, std::ostream& out) {
  const auto& g = result.group;
  out << "group " << g.label << "  order " << g.order << "  classes " << g.num_classes
      << "  |L| " << g.linear_count << "  |G'| " << g.derived_order;
  if (g.two_degree_m) out << "  m " << *g.two_degree_m;
  out << "\nclass sizes [";
  for (std::size_t i = 0; i < g.class_sizes.size(); ++i)
    out << (i ? "," : "") << g.class_sizes[i];
  out << "]  degrees [";
  for (std::size_t i = 0; i < g.degrees.size(); ++i) out << (i ? "," : "") << g.degrees[i];
  out << "]\n\n";
  auto cell = [](std::ostream& os, const std::string& text, int width) {
    os << text;
    for (int i = static_cast<int>(text.size()); i < width; ++i) os << ' ';
    os << "  ";
  };
  std::ostringstream header;
  cell(header, "method", 19);
  cell(header, "exact", 12);
  cell(header, "float", 22);
  cell(header, "am_diag", 20);
  cell(header, "am_off", 20);
  header << "vs_oracle";
  out << header.str() << "\n";
  for (const auto& rep : result.reports) {
    std::ostringstream line;
    cell(line, zlc::method_name(rep.method), 19);
    cell(line, rep.value_exact ? rep.value_exact->str() : "-", 12);
    cell(line, fmt_double(rep.value_float), 22);
    cell(line, fmt_opt(rep.am_diag), 20);
    cell(line, fmt_opt(rep.am_off), 20);
    line << fmt_opt(rep.residual_vs_oracle);
    out << line.str() << "\n";
  }
  out << "\ncross-check: max float residual " << fmt_double(result.max_float_residual)
      << " (tolerance " << fmt_double(result.tolerance) << "), exact routes "
      << (result.exact_consistent ? "consistent" : "INCONSISTENT") << " -> "
      << (result.pass() ? "PASS" : "FAIL") << "\n";
}

void render_compute_csv(const zlc::ComputeResult& result, std::ostream& out) {
  out << "label,order,method,value_exact,value_float,am_diag,am_off,residual_vs_oracle\n";
  for (const auto& rep : result.reports) {
    out << result.group.label << "," << result.group.order << "," << zlc::method_name(rep.method)
        << "," << (rep.value_exact ? rep.value_exact->str() : "") << ","
        << fmt_double(rep.value_float) << "," << (rep.am_diag ? fmt_double(*rep.am_diag) : "")
        << "," << (rep.am_off ? fmt_double(*rep.am_off) : "") << ","
        << (rep.residual_vs_oracle ? fmt_double(*rep.residual_vs_oracle) : "") << "\n";
  }
}

int run_compute(const ComputeArgs& args) {
  zlc::PipelineOptions popts;
  popts.seed = args.common.seed;
  popts.tolerance = args.common.tolerance;
  popts.direct_norm_cap = args.common.direct_norm_cap;
  popts.order_cap = args.common.order_cap;
  popts.methods = parse_methods(args.methods);

  zlc::GroupTable G;
  zlc::FamilyInstance fam;
  if (!args.generators_path.empty()) {
    auto gens = zlc::read_generator_file(args.generators_path);
    std::string label = args.label.empty()
                            ? std::filesystem::path(args.generators_path).stem().string()
                            : args.label;
    G = zlc::build_from_generators(gens, args.common.order_cap, label);
  } else {
    fam = family_from_args(args);
    G = zlc::build_family(fam, args.common.order_cap);
    if (!args.label.empty()) G.label = args.label;
  }

  auto result = zlc::compute_reports(G, fam, popts);
  if (args.common.format == "json") {
    std::cout << compute_to_json(result, popts.seed).dump(2) << "\n";
  } else if (args.common.format == "csv") {
    render_compute_csv(result, std::cout);
  } else {
    render_compute_text(result, std::cout);
  }
  return result.pass() ? kExitOk : kExitNumeric;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
  CommonOptions common;
  std::string family;
  int from = 0, to = 0;
  int p = 2;
};

struct SweepRow {
  std::string param;
  int order = 0;
  int num_classes = 0;
  int linear = 0;
  int degree = 0;  // common non-linear degree
  std::optional<zlc::Rational> exact;
  double value_float = 0.0;
  bool ok = false;
  std::string error;
};

std::vector<zlc::FamilyInstance> sweep_instances(const SweepArgs& args) {
  auto kind = zlc::family_from_name(args.family);
  if (!kind) throw zlc::UsageError("InvalidFamily", "unknown family '" + args.family + "'");
  if (args.from <= 0 || args.to < args.from)
    throw zlc::UsageError("InvalidRange", "need 0 < --from <= --to");
  std::vector<zlc::FamilyInstance> out;
  for (int v = args.from; v <= args.to; ++v) {
    zlc::FamilyInstance fam;
    fam.kind = *kind;
    switch (*kind) {
      case zlc::FamilyKind::dihedral:
        if (v < 3) continue;
        fam.n = v;
        break;
      case zlc::FamilyKind::affine: {
        auto pk = zlc::prime_power_decompose(v);
        if (!pk || v < 3) continue;
        fam.q = v;
        break;
      }
      case zlc::FamilyKind::a2xb: {
        auto pk = zlc::prime_power_decompose(v);
        if (!pk || pk->first == 2 || v < 5) continue;
        fam.q = v;
        break;
      }
      case zlc::FamilyKind::extraspecial:
        fam.p = args.p;
        fam.n = v;
        break;
      default:
        throw zlc::UsageError("InvalidFamily",
                              "sweep supports dihedral, affine, a2xb and extraspecial");
    }
    out.push_back(fam);
  }
  return out;
}

int run_sweep(const SweepArgs& args) {
  zlc::PipelineOptions popts;
  popts.seed = args.common.seed;
  popts.tolerance = args.common.tolerance;
  popts.direct_norm_cap = 0;  // the oracle is not part of sweeps
  popts.order_cap = args.common.order_cap;

  std::vector<SweepRow> rows;
  bool all_ok = true;
  for (const auto& fam : sweep_instances(args)) {
    SweepRow row;
    switch (fam.kind) {
      case zlc::FamilyKind::dihedral: row.param = "n=" + std::to_string(fam.n); break;
      case zlc::FamilyKind::extraspecial:
        row.param = "p=" + std::to_string(fam.p) + ";n=" + std::to_string(fam.n);
        break;
      default: row.param = "q=" + std::to_string(fam.q); break;
    }
    try {
      zlc::GroupTable G = zlc::build_family(fam, args.common.order_cap);
      auto result = zlc::compute_reports(G, fam, popts);
      row.order = result.group.order;
      row.num_classes = result.group.num_classes;
      row.linear = result.group.linear_count;
      row.degree = result.group.two_degree_m.value_or(0);
      for (const auto& rep : result.reports)
        if (rep.value_exact) row.exact = rep.value_exact;
      row.value_float = result.reports.front().value_float;
      row.ok = result.pass();
      if (!row.ok) row.error = "cross-check failed";
    } catch (const zlc::Error& e) {
      row.ok = false;
      row.error = e.what();
    }
    all_ok = all_ok && row.ok;
    rows.push_back(std::move(row));
  }

  if (args.common.format == "json") {
    json j;
    j["command"] = "sweep";
    j["family"] = args.family;
    j["seed"] = args.common.seed;
    json jrows = json::array();
    for (const auto& row : rows) {
      jrows.push_back({{"param", row.param},
                       {"order", row.order},
                       {"num_classes", row.num_classes},
                       {"linear_characters", row.linear},
                       {"nonlinear_degree", row.degree},
                       {"value_exact", row.exact ? json(row.exact->str()) : json(nullptr)},
                       {"value_float", row.value_float},
                       {"status", row.ok ? "ok" : "error"},
                       {"error", row.error.empty() ? json(nullptr) : json(row.error)}});
    }
    j["rows"] = jrows;
    std::cout << j.dump(2) << "\n";
  } else if (args.common.format == "csv") {
    std::cout << "family,param,order,num_classes,linear_characters,nonlinear_degree,"
                 "value_exact,value_float,status,error\n";
    for (const auto& row : rows) {
      std::cout << args.family << "," << row.param << "," << row.order << "," << row.num_classes
                << "," << row.linear << "," << row.degree << ","
                << (row.exact ? row.exact->str() : "") << "," << fmt_double(row.value_float)
                << "," << (row.ok ? "ok" : "error") << ","
                << (row.error.empty() ? "" : "\"" + row.error + "\"") << "\n";
    }
  } else {
    std::cout << "sweep " << args.family << "\n";
    std::cout << "param        order  classes  |L|   m    exact        float\n";
    for (const auto& row : rows) {
      std::ostringstream line;
      line.setf(std::ios::left);
      line.width(13);
      line << row.param;
      line.width(7);
      line << row.order;
      line.width(9);
      line << row.num_classes;
      line.width(6);
      line << row.linear;
      line.width(5);
      line << row.degree;
      line.width(13);
      line << (row.exact ? row.exact->str() : "-");
      line << (row.ok ? fmt_double(row.value_float) : "ERROR " + row.error);
      std::cout << line.str() << "\n";
    }
  }
  return all_ok ? kExitOk : kExitNumeric;
}

// ----------------------------------------------------------------- verify

int run_verify(const CommonOptions& common, const std::string& only, bool inject_corruption) {
  zlc::VerifyOptions vopts;
  vopts.seed = common.seed;
  vopts.only = only;
  vopts.inject_corruption = inject_corruption;
  auto results = zlc::run_acceptance_checks(vopts);
  if (results.empty())
    throw zlc::UsageError("InvalidFilter", "no check matches --only '" + only + "'");

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (common.format == "json") {
    json j;
    j["command"] = "verify";
    j["seed"] = common.seed;
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"id", r.id},
                        {"label", r.label},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
    j["checks"] = checks;
    j["pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    std::cout << "id,status,seconds,label\n";
    for (const auto& r : results)
      std::cout << r.id << "," << (r.pass ? "pass" : "fail") << "," << r.seconds << ",\""
                << r.label << "\"\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.label << "\n";
      if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return all_pass ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------- figure1

int run_figure1(const CommonOptions& common) {
  zlc::Figure1 fig = zlc::figure1_table(common.seed);
  bool all_verified = true;
  for (const auto& row : fig.rows) all_verified = all_verified && row.verified;

  if (common.format == "json") {
    json j;
    j["command"] = "figure1";
    j["seed"] = common.seed;
    json rows = json::array();
    for (const auto& row : fig.rows)
      rows.push_back({{"family", row.family},
                      {"order", row.order_sym},
                      {"linear_characters", row.linear_sym},
                      {"nonlinear_degree", row.degree_sym},
                      {"min_at", row.min_at},
                      {"am_minus_1_min", row.min_value.str()},
                      {"verified", row.verified},
                      {"residual", row.residual}});
    j["rows"] = rows;
    j["note"] = fig.note;
    j["pass"] = all_verified;
    std::cout << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    std::cout << "family,order,linear_characters,nonlinear_degree,min_at,am_minus_1_min,verified\n";
    for (const auto& row : fig.rows)
      std::cout << "\"" << row.family << "\"," << row.order_sym << "," << row.linear_sym << ","
                << row.degree_sym << ",\"" << row.min_at << "\"," << row.min_value.str() << ","
                << (row.verified ? "yes" : "no") << "\n";
    std::cerr << fig.note << "\n";
  } else {
    std::cout << "family                               |G|        |L|      c.d.     min at    AM-1 min  verified\n";
    for (const auto& row : fig.rows) {
      std::ostringstream line;
      line.setf(std::ios::left);
      line.width(37);
      line << row.family;
      line.width(11);
      line << row.order_sym;
      line.width(9);
      line << row.linear_sym;
      line.width(9);
      line << row.degree_sym;
      line.width(10);
      line << row.min_at;
      line.width(10);
      line << row.min_value.str();
      line << (row.verified ? "yes" : "NO");
      std::cout << line.str() << "\n";
    }
    std::cout << "\n" << fig.note << "\n";
  }
  return all_verified ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amenability constants of centres of finite group algebras"};
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "Compute the constant of one group");
  add_common(compute, compute_args.common);
  auto* family_opt = compute->add_option("--family", compute_args.family,
                                         "Family: dihedral, cyclic, abelian, quaternion8, "
                                         "extraspecial, affine, a2xb, frobenius");
  auto* gens_opt =
      compute->add_option("--generators", compute_args.generators_path,
                          "Generator file, one permutation per line in cycle notation");
  family_opt->excludes(gens_opt);
  compute->add_option("--label", compute_args.label, "Override the group label");
  compute->add_option("--methods", compute_args.methods,
                      "Comma-separated method tags, or 'all'");
  compute->add_option("--n", compute_args.n, "Family parameter n");
  compute->add_option("--p", compute_args.p, "Family parameter p (prime)");
  compute->add_option("--q", compute_args.q, "Family parameter q (prime power)");
  compute->add_option("--h", compute_args.h, "Frobenius complement order");
  compute->add_option("--k", compute_args.k, "Frobenius kernel order");
  compute->add_option("--action", compute_args.multiplier,
                      "Frobenius action multiplier (0 = automatic)");
  compute->add_option("--orders", compute_args.orders, "Abelian factor orders");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Compute a family over a parameter range");
  add_common(sweep, sweep_args.common);
  sweep->add_option("--family", sweep_args.family, "dihedral, affine, a2xb or extraspecial")
      ->required();
  sweep->add_option("--from", sweep_args.from, "First parameter value")->required();
  sweep->add_option("--to", sweep_args.to, "Last parameter value")->required();
  sweep->add_option("--p", sweep_args.p, "Prime for extraspecial sweeps");

  CommonOptions verify_common;
  std::string verify_only;
  bool inject_corruption = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification corpus");
  add_common(verify, verify_common);
  verify->add_option("--only", verify_only, "Run only checks whose id contains this substring");
  verify->add_flag("--inject-corruption", inject_corruption,
                   "Test hook: corrupt one character table to exercise the failure path");

  CommonOptions figure1_common;
  CLI::App* figure1 = app.add_subcommand("figure1", "Print the family summary table");
  add_common(figure1, figure1_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (compute_args.family.empty() && compute_args.generators_path.empty())
        throw zlc::UsageError("MissingParameter", "need --family or --generators");
      return run_compute(compute_args);
    }
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (verify->parsed()) return run_verify(verify_common, verify_only, inject_corruption);
    if (figure1->parsed()) return run_figure1(figure1_common);
  } catch (const zlc::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zlc::ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const zlc::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

// End-to-end tests of the zlconst binary: output formats, exit codes and
// the JSON round-trip guarantee.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ZLCONST_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) { return std::string(ZLCONST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("compute dihedral 5 reports the exact golden value") {
  auto r = run("compute --family dihedral --n 5 --methods all --format json --seed 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["group"]["order"] == 10);
  CHECK(j["group"]["class_sizes"] == json::array({1, 2, 2, 5}));
  CHECK(j["cross_check"]["pass"] == true);
  int exact_seen = 0;
  for (const auto& rep : j["reports"]) {
    if (!rep["value_exact"].is_null()) {
      CHECK(rep["value_exact"] == "73/25");
      ++exact_seen;
    }
    if (!rep["residual_vs_oracle"].is_null()) CHECK(rep["residual_vs_oracle"].get<double>() < 1e-9);
  }
  CHECK(exact_seen == 2);
}

TEST_CASE("compute cyclic 6 is exactly 1") {
  auto r = run("compute --family cyclic --n 6 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  bool exact_one = false;
  for (const auto& rep : j["reports"])
    if (rep["value_exact"] == "1/1") exact_one = true;
  CHECK(exact_one);
  CHECK(j["group"]["abelian"] == true);
}

TEST_CASE("compute from a generator file uses only the table methods") {
  auto r = run("compute --generators " + data_file("s4.gens") + " --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["group"]["order"] == 24);
  CHECK(j["group"]["two_degree_m"].is_null());
  std::vector<std::string> methods;
  for (const auto& rep : j["reports"]) methods.push_back(rep["method"]);
  CHECK(methods == std::vector<std::string>{"general_eq2", "direct_norm_eq1"});
  CHECK(j["cross_check"]["pass"] == true);
}

TEST_CASE("emitted JSON round-trips doubles bit for bit") {
  auto r = run("compute --family a2xb --q 9 --format json");
  REQUIRE(r.exit_code == 0);
  json first = json::parse(r.out);
  json second = json::parse(first.dump());
  for (std::size_t i = 0; i < first["reports"].size(); ++i) {
    double a = first["reports"][i]["value_float"].get<double>();
    double b = second["reports"][i]["value_float"].get<double>();
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
  CHECK(first == second);
}

TEST_CASE("exit codes distinguish usage, construction and numeric errors") {
  CHECK(run("compute --family no-such-family --n 3").exit_code == 1);
  CHECK(run("compute --family dihedral").exit_code == 1);  // missing --n
  CHECK(run("nonsense-subcommand").exit_code == 1);
  CHECK(run("compute --family dihedral --n 2").exit_code == 2);  // ArgumentTooSmall
  CHECK(run("compute --family affine --q 6").exit_code == 2);   // InvalidFieldOrder
  CHECK(run("compute --family frobenius --k 5 --h 4 --action 4").exit_code == 2);
  CHECK(run("verify --only c1 --inject-corruption").exit_code == 0);  // corruption hits c9 only
  auto corrupted = run("verify --only c9 --inject-corruption");
  CHECK(corrupted.exit_code == 3);
  CHECK(corrupted.out.find("OrthogonalityFailure") != std::string::npos);
}

TEST_CASE("sweep over the affine family approaches 5 from below") {
  auto r = run("sweep --family affine --from 3 --to 13 --format csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "family,param,order,num_classes,linear_characters,nonlinear_degree,"
        "value_exact,value_float,status,error");
  std::vector<double> values;
  std::vector<std::string> params;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    REQUIRE(row.size() >= 9);
    params.push_back(row[1]);
    values.push_back(std::stod(row[7]));
    CHECK(row[8] == "ok");
  }
  CHECK(params == std::vector<std::string>{"q=3", "q=4", "q=5", "q=7", "q=8", "q=9", "q=11",
                                           "q=13"});
  for (std::size_t i = 0; i + 1 < values.size(); ++i) CHECK(values[i] < values[i + 1]);
  for (double v : values) CHECK(v < 5.0);
}

TEST_CASE("sweep records per-row errors and keeps going") {
  auto r = run("sweep --family extraspecial --p 3 --from 1 --to 2 --order-cap 200 --format json");
  CHECK(r.exit_code == 3);  // the n = 2 row exceeds the lowered order cap
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["status"] == "ok");
  CHECK(j["rows"][0]["value_exact"] == "59/27");
  CHECK(j["rows"][1]["status"] == "error");
  std::string err = j["rows"][1]["error"];
  CHECK(err.find("OrderExceedsCap") != std::string::npos);
}

TEST_CASE("dihedral sweep matches the odd/even closed forms") {
  auto r = run("sweep --family dihedral --from 3 --to 12 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 10);
  std::vector<std::string> expected = {"7/3",     "7/4",   "73/25", "7/3",   "157/49",
                                       "43/16",   "91/27", "73/25", "421/121", "37/12"};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(j["rows"][i]["value_exact"] == expected[i]);
}

TEST_CASE("figure1 emits the five minima and the formula note") {
  auto r = run("figure1 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 5);
  std::vector<std::string> minima;
  for (const auto& row : j["rows"]) {
    minima.push_back(row["am_minus_1_min"]);
    CHECK(row["verified"] == true);
  }
  CHECK(minima == std::vector<std::string>{"4/3", "48/25", "4/3", "3/4", "3/4"});
  std::string note = j["note"];
  CHECK(note.find("3/4") != std::string::npos);
  CHECK(note.find("transcription error") != std::string::npos);

  auto text = run("figure1");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("note:") != std::string::npos);
}

TEST_CASE("verify filter runs a single check") {
  auto r = run("verify --only lemma24 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["id"] == "c3_lemma24");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(run("verify --only no-such-check").exit_code == 1);
}

TEST_CASE("seed comes from ZLCONST_SEED when not given") {
  std::string cmd = "ZLCONST_SEED=777 " + std::string(ZLCONST_BIN) +
                    " compute --family cyclic --n 4 --format json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  pclose(pipe);
  json j = json::parse(out);
  CHECK(j["seed"] == 777);
}

#include "zlconst/perm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "zlconst/errors.hpp"

namespace zlc {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Permutation identity_permutation(int degree) {
  Permutation r(degree);
  for (int i = 0; i < degree; ++i) r[i] = i;
  return r;
}

void check_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int image : p) {
    if (image < 0 || image >= static_cast<int>(p.size()) || seen[image])
      throw ConstructionError("InvalidPermutation", "image table is not a bijection");
    seen[image] = true;
  }
}

Permutation parse_cycles(std::string_view line, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = degree - 1;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(')
      throw ConstructionError("InvalidPermutation",
                              "expected '(' in cycle notation: " + std::string(line));
    ++i;
    std::vector<int> cycle;
    while (i < line.size() && line[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ConstructionError("InvalidPermutation",
                                "bad character in cycle: " + std::string(line));
      int v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        v = v * 10 + (line[i] - '0');
        ++i;
      }
      cycle.push_back(v);
      max_point = std::max(max_point, v);
    }
    if (i == line.size())
      throw ConstructionError("InvalidPermutation", "unclosed cycle: " + std::string(line));
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }

  Permutation p = identity_permutation(max_point + 1);
  std::vector<bool> moved(p.size(), false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (moved[from])
        throw ConstructionError("InvalidPermutation",
                                "point repeated across cycles: " + std::string(line));
      moved[from] = true;
      p[from] = to;
    }
  }
  check_permutation(p);
  return p;
}

std::vector<Permutation> parse_generator_text(std::string_view text) {
  std::vector<Permutation> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c) != 0;
    });
    if (blank) continue;
    gens.push_back(parse_cycles(line));
  }
  // unify degrees: pad with fixed points
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  for (auto& g : gens) {
    while (g.size() < degree) g.push_back(static_cast<int>(g.size()));
  }
  return gens;
}

std::vector<Permutation> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("FileNotFound", "cannot open generator file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_text(buffer.str());
}

}  // namespace zlc

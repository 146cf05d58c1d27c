#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace zlc {

/// A permutation as an image table: perm[i] is where point i goes.
using Permutation = std::vector<int>;

/// compose(p, q) applies q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(int degree);

/// Throws InvalidPermutation unless `p` is a bijection on 0..degree-1.
void check_permutation(const Permutation& p);

/// Parses one line of disjoint-cycle notation over 0-based points,
/// e.g. "(0 1 2 3 4)(5 6)". `degree` extends the point set; points named
/// in the line may grow it. Commas between points are accepted.
Permutation parse_cycles(std::string_view line, int degree = 0);

/// Reads a generator file: one permutation per line in cycle notation,
/// blank lines and '#' comments ignored. All permutations are returned
/// on the common point set (the largest point named anywhere, plus one).
std::vector<Permutation> read_generator_file(const std::string& path);
std::vector<Permutation> parse_generator_text(std::string_view text);

}  // namespace zlc

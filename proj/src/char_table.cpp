#include "zlconst/char_table.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "zlconst/errors.hpp"

namespace zlc {

namespace {

// Random combination sum_j t_j B_j of the class matrices B_j with
// (B_j)_{i,k} = a_{jik}, the coefficient of class k in the product
// (class j) * (class i). A vector of central character values (one per
// class, identity coordinate 1) is a common right eigenvector of every B_j,
// so for generic t the combination has simple spectrum and its eigenvectors
// are exactly those vectors. The B_j are never stored individually: r of
// them at r x r each is r^3 memory, which large abelian-ish groups cannot
// afford.
Eigen::MatrixXd class_matrix_combination(const GroupTable& G, const ConjClassPartition& P,
                                         const std::vector<double>& t) {
  const int r = static_cast<int>(P.classes.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(r, r);
  for (int k = 0; k < r; ++k) {
    const Elem z = P.reps[k];
    for (int j = 0; j < r; ++j) {
      for (Elem x : P.classes[j]) {
        Elem y = G.at(G.inv[x], z);  // the unique y with x * y = z
        T(P.class_of[y], k) += t[j];
      }
    }
  }
  return T;
}

std::vector<double> draw_coefficients(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<double> t(count);
  // explicit bit mapping instead of std::uniform_real_distribution keeps the
  // draw identical across standard library implementations
  for (auto& x : t) x = 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return t;
}

std::uint64_t derived_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt + 1);
}

long long round_scaled(double v) { return std::llround(v * 1e6); }

}  // namespace

CharTable character_table(const GroupTable& G, const ConjClassPartition& P, std::uint64_t seed) {
  const int r = static_cast<int>(P.classes.size());

  Eigen::MatrixXcd vectors;
  bool split = false;
  for (int attempt = 0; attempt < kMaxSplitAttempts && !split; ++attempt) {
    const auto t = draw_coefficients(attempt == 0 ? seed : derived_seed(seed, attempt), r);
    const Eigen::MatrixXd T = class_matrix_combination(G, P, t);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(T.cast<std::complex<double>>(), true);
    if (solver.info() != Eigen::Success) continue;

    const auto& lambda = solver.eigenvalues();
    bool degenerate = false;
    for (int a = 0; a < r && !degenerate; ++a)
      for (int b = a + 1; b < r; ++b)
        if (std::abs(lambda(a) - lambda(b)) < kEigenGapThreshold) {
          degenerate = true;
          break;
        }
    if (degenerate) continue;

    vectors = solver.eigenvectors();
    split = true;
  }
  if (!split)
    throw NumericError("DegenerateSplitFailure",
                       "could not separate eigenvalues after " +
                           std::to_string(kMaxSplitAttempts) + " redraws");

  CharTable T;
  T.num_classes = r;
  T.group_order = G.order;
  T.class_sizes = P.sizes;
  T.degrees.resize(r);
  T.values.resize(static_cast<std::size_t>(r) * r);

  std::vector<std::vector<std::complex<double>>> rows(r);
  std::vector<int> degs(r);
  for (int c = 0; c < r; ++c) {
    Eigen::VectorXcd v = vectors.col(c);
    if (std::abs(v(0)) < 1e-12 * v.norm())
      throw NumericError("OrthogonalityFailure",
                         "eigenvector has vanishing identity-class coordinate");
    v /= v(0);  // central character values, omega_0 = 1

    double s = 0.0;
    for (int j = 0; j < r; ++j) s += std::norm(v(j)) / P.sizes[j];
    const double dval = std::sqrt(static_cast<double>(G.order) / s);
    const int d = static_cast<int>(std::llround(dval));
    if (d < 1 || std::abs(dval - d) > kDegreeRoundTolerance)
      throw NumericError("OrthogonalityFailure",
                         "character degree " + std::to_string(dval) +
                             " does not round to an integer");
    degs[c] = d;
    rows[c].resize(r);
    for (int j = 0; j < r; ++j) rows[c][j] = static_cast<double>(d) * v(j) / static_cast<double>(P.sizes[j]);
  }

  // deterministic row order: by degree, then column-wise on rounded values,
  // larger real (then imaginary) part first
  std::vector<int> order(r);
  for (int i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    for (int j = 0; j < r; ++j) {
      long long ra = round_scaled(rows[a][j].real()), rb = round_scaled(rows[b][j].real());
      if (ra != rb) return ra > rb;
      long long ia = round_scaled(rows[a][j].imag()), ib = round_scaled(rows[b][j].imag());
      if (ia != ib) return ia > ib;
    }
    return false;
  });
  for (int i = 0; i < r; ++i) {
    T.degrees[i] = degs[order[i]];
    for (int j = 0; j < r; ++j) T.values[static_cast<std::size_t>(i) * r + j] = rows[order[i]][j];
  }

  validate_char_table(T);
  check_linear_count(T, G);
  return T;
}

OrthogonalityResiduals char_table_residuals(const CharTable& T) {
  const int r = T.num_classes;
  const double n = static_cast<double>(T.group_order);
  OrthogonalityResiduals res;
  for (int i = 0; i < r; ++i)
    res.degree_col_max =
        std::max(res.degree_col_max, std::abs(T.at(i, 0) - std::complex<double>(T.degrees[i], 0)));
  for (int i = 0; i < r; ++i) {
    for (int m = i; m < r; ++m) {
      std::complex<double> s = 0;
      for (int j = 0; j < r; ++j)
        s += static_cast<double>(T.class_sizes[j]) * T.at(i, j) * std::conj(T.at(m, j));
      res.row_max = std::max(res.row_max, std::abs(s - (i == m ? n : 0.0)));
    }
  }
  for (int j = 0; j < r; ++j) {
    for (int l = j; l < r; ++l) {
      std::complex<double> s = 0;
      for (int i = 0; i < r; ++i) s += T.at(i, j) * std::conj(T.at(i, l));
      res.col_max = std::max(res.col_max, std::abs(s - (j == l ? n / T.class_sizes[j] : 0.0)));
    }
  }
  return res;
}

void validate_char_table(const CharTable& T) {
  const int r = T.num_classes;
  if (r <= 0 || T.values.size() != static_cast<std::size_t>(r) * r ||
      static_cast<int>(T.class_sizes.size()) != r || static_cast<int>(T.degrees.size()) != r)
    throw NumericError("OrthogonalityFailure", "character table has inconsistent dimensions");

  long long size_sum = 0;
  for (int s : T.class_sizes) size_sum += s;
  long long degree_sq_sum = 0;
  for (int d : T.degrees) degree_sq_sum += static_cast<long long>(d) * d;
  if (size_sum != T.group_order || degree_sq_sum != T.group_order)
    throw NumericError("OrthogonalityFailure",
                       "class equation or degree sum does not match the group order");

  const double tol = kOrthogonalityTolerancePerOrder * static_cast<double>(T.group_order);
  const auto res = char_table_residuals(T);
  if (res.degree_col_max > tol)
    throw NumericError("OrthogonalityFailure", "identity column does not carry the degrees");
  if (res.row_max > tol || res.col_max > tol)
    throw NumericError("OrthogonalityFailure",
                       "orthogonality residual " + std::to_string(std::max(res.row_max, res.col_max)) +
                           " exceeds tolerance " + std::to_string(tol));
}

std::vector<int> character_degrees(const CharTable& T) {
  std::vector<int> d = T.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

int linear_character_count(const CharTable& T) {
  return static_cast<int>(std::count(T.degrees.begin(), T.degrees.end(), 1));
}

void check_linear_count(const CharTable& T, const GroupTable& G) {
  const int expected = G.order / derived_subgroup(G).order;
  if (linear_character_count(T) != expected)
    throw NumericError("InconsistentWithDerivedSubgroup",
                       "linear character count " + std::to_string(linear_character_count(T)) +
                           " != |G|/|G'| = " + std::to_string(expected));
}

std::optional<int> two_degree_profile(const CharTable& T) {
  int m = 0;
  for (int d : T.degrees) {
    if (d == 1) continue;
    if (m == 0) m = d;
    if (d != m) return std::nullopt;
  }
  if (m == 0) return std::nullopt;  // abelian
  return m;
}

}  // namespace zlc

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "cli/system_format.hpp"
#include "mroot/error.hpp"
#include "mroot/random.hpp"
#include "mroot/roots.hpp"
#include "mroot/solver.hpp"
#include "support.hpp"

using namespace mroot;
using namespace mroot::testing;

namespace {

Eigen::MatrixXcd random_matrix(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd A(n, n);
  for (long i = 0; i < A.size(); ++i) A.data()[i] = Complex(g(rng), g(rng));
  return A;
}

// P diag(values) P^{-1} for a fixed random P.
std::vector<Eigen::MatrixXcd> commuting_family(const std::vector<std::vector<Complex>>& values, std::uint64_t seed) {
  const long n = static_cast<long>(values.front().size());
  const Eigen::MatrixXcd P = random_matrix(n, seed);
  const Eigen::MatrixXcd Pinv = P.inverse();
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& v : values) {
    Eigen::VectorXcd d(n);
    for (long i = 0; i < n; ++i) d(i) = v[i];
    out.push_back(P * d.asDiagonal() * Pinv);
  }
  return out;
}

double lower_norm(const Eigen::MatrixXcd& T) {
  const Eigen::MatrixXcd L = T.triangularView<Eigen::StrictlyLower>();
  return L.norm();
}

}  // namespace

TEST(SimultaneousSchur, TriangularizesACommutingFamily) {
  const std::vector<std::vector<Complex>> vals{{1.0, 2.0, -1.0, 0.5}, {3.0, -2.0, 0.0, 1.0}};
  const auto mats = commuting_family(vals, 3);
  const SchurForm f = simultaneous_schur(mats, 9);
  const long n = 4;
  EXPECT_LE((f.Q.adjoint() * f.Q - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-13);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    EXPECT_LE(lower_norm(f.T[i]), 1e-10);
    EXPECT_LE((f.Q * f.T[i] * f.Q.adjoint() - mats[i]).norm(), 1e-10 * mats[i].norm());
  }
  // Diagonal entries pair up with the original points.
  for (long k = 0; k < n; ++k) {
    bool found = false;
    for (long j = 0; j < n; ++j) {
      found = found || (std::abs(f.T[0](k, k) - vals[0][j]) < 1e-9 && std::abs(f.T[1](k, k) - vals[1][j]) < 1e-9);
    }
    EXPECT_TRUE(found) << k;
  }
}

TEST(SimultaneousSchur, RejectsNonCommutingMatrices) {
  try {
    simultaneous_schur({random_matrix(3, 1), random_matrix(3, 2)}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCommutator);
  }
}

TEST(Clustering, SingleLinkage) {
  Eigen::VectorXcd v(5);
  v << 1.0, 2.0, 1.0 + 1e-9, 3.0, Complex(2.0, 1e-8);
  const auto c = cluster_values(v, 1e-6);
  EXPECT_EQ(c, (std::vector<std::vector<int>>{{0, 2}, {1, 4}, {3}}));
  // Chains link through intermediate values.
  Eigen::VectorXcd w(3);
  w << 0.0, 0.8e-6, 1.6e-6;
  EXPECT_EQ(cluster_values(w, 1e-6).size(), 1u);
}

TEST(Reorder, SwapKeepsTheFactorization) {
  Eigen::MatrixXcd T = random_matrix(4, 6).triangularView<Eigen::Upper>();
  SchurForm f;
  f.Q = Eigen::MatrixXcd::Identity(4, 4);
  f.Tstar = T;
  f.T = {T};
  const Complex a = T(1, 1);
  const Complex b = T(2, 2);
  swap_schur_adjacent(f, 1);
  EXPECT_NEAR(std::abs(f.Tstar(1, 1) - b), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(f.Tstar(2, 2) - a), 0.0, 1e-12);
  EXPECT_LE(lower_norm(f.Tstar), 1e-12);
  EXPECT_LE((f.Q * f.Tstar * f.Q.adjoint() - T).norm(), 1e-12);
  EXPECT_LE((f.Q * f.T[0] * f.Q.adjoint() - T).norm(), 1e-12);
}

TEST(Reorder, GroupsEqualDiagonalEntries) {
  Eigen::MatrixXcd T = random_matrix(5, 8).triangularView<Eigen::Upper>();
  const Complex vals[5] = {1.0, 2.0, 1.0, 3.0, 2.0};
  for (int i = 0; i < 5; ++i) T(i, i) = vals[i];
  SchurForm f;
  f.Q = Eigen::MatrixXcd::Identity(5, 5);
  f.Tstar = T;
  f.T = {T};
  const ClusteredSchur c = cluster_reorder(f, 1e-6);
  ASSERT_TRUE(c.reordered) << c.warning;
  ASSERT_EQ(c.clusters.size(), 3u);
  for (const auto& [begin, size] : c.clusters) {
    for (long k = begin; k < begin + size; ++k) {
      EXPECT_NEAR(std::abs(c.form.Tstar(k, k) - c.form.Tstar(begin, begin)), 0.0, 1e-10);
    }
  }
  EXPECT_LE((c.form.Q * c.form.Tstar * c.form.Q.adjoint() - T).norm(), 1e-10 * T.norm());
}

TEST(Pencil, InfiniteAndFiniteEigenvalues) {
  Eigen::MatrixXcd A(2, 2), B(2, 2);
  A << 1, 0, 0, 2;
  B << 1, 0, 0, 0;
  const auto e = pencil_eigenvalues(A, B);
  ASSERT_EQ(e.size(), 2u);
  int infinite = 0;
  for (const auto& x : e) {
    if (x.infinite) {
      ++infinite;
    } else {
      EXPECT_NEAR(std::abs(x.value - 1.0), 0.0, 1e-14);
    }
  }
  EXPECT_EQ(infinite, 1);
}

TEST(Pencil, SingularPencilThrows) {
  Eigen::MatrixXcd A(2, 2), B(2, 2);
  A << 1, 0, 0, 0;
  B << 1, 0, 0, 0;
  try {
    pencil_eigenvalues(A, B);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegeneratePencil);
  }
}

TEST(Residual, ScaleInvariantFormula) {
  // f = 2x^2 - 8 at z = 2.1: |2*4.41 - 8| / (10 * 2.1^2).
  const PolynomialSystem s({Polynomial::monomial({2}, 2.0) - Polynomial::constant(1, 8.0)}, {"x"}, Mode::kAffine);
  const std::vector<Complex> z{2.1};
  EXPECT_NEAR(residual(s, z), std::abs(2 * 4.41 - 8.0) / (10.0 * 4.41), 1e-15);
  const std::vector<Complex> small{0.5};
  EXPECT_NEAR(residual(s, small), std::abs(0.5 - 8.0) / 10.0, 1e-15);
}

TEST(Extract, DoubleRootIsOneClusterOfSizeTwo) {
  const RootSet r = solve(cli::parse_system(slurp(data_path("double_root.sys"))));
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].multiplicity, 2);
  EXPECT_LE(affine_distance(r.roots[0].coords, {1.0, 1.0}), 1e-6);
  EXPECT_EQ(r.diagnostics.clusters, 1);
}

TEST(Extract, UnivariateMatchesCompanionMatrix) {
  const PolynomialSystem s = generate_dense_system(1, 5, 21);
  const RootSet r = solve(s);
  ASSERT_EQ(r.roots.size(), 5u);
  // Companion matrix of the monic polynomial.
  const auto& p = s.poly(0);
  const Complex lead = p.coefficient({5});
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(5, 5);
  for (int i = 1; i < 5; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < 5; ++i) C(i, 4) = -p.coefficient({i}) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<Point> expected;
  for (long i = 0; i < 5; ++i) expected.push_back({es.eigenvalues()(i)});
  EXPECT_LE(match_distance(coords(r), expected, affine_distance), 1e-10);
}

TEST(Extract, ProjectiveRootsAreBlockNormalized) {
  const RootSet r = solve(cli::parse_system(slurp(data_path("example_projective.sys"))));
  ASSERT_EQ(r.roots.size(), 2u);
  int charts = 0;
  for (const auto& root : r.roots) {
    double m = 0.0;
    for (const auto& c : root.coords) m = std::max(m, std::abs(c));
    EXPECT_EQ(m, 1.0);
    if (root.affine) {
      ++charts;
      EXPECT_NEAR(std::abs((*root.affine)[0] + 10.0), 0.0, 1e-10);
      EXPECT_NEAR(std::abs((*root.affine)[1] - 12.0), 0.0, 1e-10);
    }
  }
  EXPECT_EQ(charts, 1);
}

TEST(Extract, RootsAreSorted) {
  const RootSet r = solve(generate_dense_system(2, 4, 3));
  for (std::size_t i = 1; i < r.roots.size(); ++i) {
    const auto& a = r.roots[i - 1].coords;
    const auto& b = r.roots[i].coords;
    const auto key = [](const Point& p) {
      std::vector<double> k;
      for (const auto& c : p) {
        k.push_back(c.real());
        k.push_back(c.imag());
      }
      return k;
    };
    EXPECT_LE(key(a), key(b));
  }
}

TEST(Extract, SeedChangesNothingBeyondTolerance) {
  const PolynomialSystem s = generate_dense_system(3, 3, 5);
  BuildOptions a, b;
  a.seed = 10;
  b.seed = 11;
  EXPECT_LE(root_set_distance(solve(s, a), solve(s, b)), 1e-8);
}

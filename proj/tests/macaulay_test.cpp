#include <gtest/gtest.h>

#include "cli/system_format.hpp"
#include "mroot/error.hpp"
#include "mroot/macaulay.hpp"
#include "mroot/polytope.hpp"
#include "support.hpp"

using namespace mroot;
using namespace mroot::testing;

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PolynomialSystem affine_example() { return cli::parse_system(slurp(data_path("example_affine.sys"))); }

}  // namespace

TEST(Monomials, CountsAndOrder) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 5; ++d) {
      EXPECT_EQ(static_cast<std::int64_t>(monomials_of_degree(n, d).size()), binomial(n + d - 1, d));
      EXPECT_EQ(static_cast<std::int64_t>(monomials_up_to_degree(n, d).size()), binomial(n + d, d));
    }
  }
  const auto m = monomials_up_to_degree(2, 2);
  EXPECT_EQ(m, (std::vector<Exponents>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
  const VariableBlocks blocks{{1, 1}, true};
  const auto mh = monomials_of_multidegree(blocks, {3, 3});
  EXPECT_EQ(mh.size(), 16u);
  for (const auto& e : mh) {
    EXPECT_EQ(e[0] + e[1], 3);
    EXPECT_EQ(e[2] + e[3], 3);
  }
}

TEST(MonomialIndex, Lookup) {
  const MonomialIndex idx(monomials_up_to_degree(2, 2));
  EXPECT_EQ(idx.find({1, 1}), 4);
  EXPECT_EQ(idx.find({3, 0}), -1);
  EXPECT_THROW(idx.at({3, 0}), Error);
}

TEST(DenseMacaulay, AffineExampleMatchesPrintedMatrix) {
  const MacaulayMatrix M = dense_macaulay(affine_example());
  ASSERT_EQ(M.entries.rows(), 10);
  ASSERT_EQ(M.entries.cols(), 6);
  EXPECT_EQ(M.degree, std::vector<int>{3});
  // Printed as M^T: one line per column.
  const double printed[6][10] = {{7, 3, -6, -4, 2, 5, 0, 0, 0, 0},  {0, 7, 0, 3, -6, 0, -4, 2, 5, 0},
                                 {0, 0, 7, 0, 3, -6, 0, -4, 2, 5},  {-1, -3, 14, -2, 2, -3, 0, 0, 0, 0},
                                 {0, -1, 0, -3, 14, 0, -2, 2, -3, 0}, {0, 0, -1, 0, -3, 14, 0, -2, 2, -3}};
  for (int c = 0; c < 6; ++c) {
    for (int r = 0; r < 10; ++r) EXPECT_EQ(M.entries(r, c), Complex(printed[c][r])) << r << "," << c;
  }
  const std::vector<std::string> vars{"x1", "x2"};
  EXPECT_EQ(column_label(M.columns[0], vars), "(1, 1)");
  EXPECT_EQ(column_label(M.columns[4], vars), "(2, x1)");
  EXPECT_EQ(monomial_string(M.rows[7], vars), "x1^2*x2");
}

TEST(DenseMacaulay, ClosedFormSizes) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 4; ++d) {
      std::vector<Polynomial> polys;
      for (int i = 0; i < n; ++i) {
        Polynomial p = Polynomial::monomial(Exponents(n, 0), 1.0);
        Exponents e(n, 0);
        e[i] = d;
        p += Polynomial::monomial(e, 2.0);
        polys.push_back(p);
      }
      const PolynomialSystem s(polys, names("x", n), Mode::kAffine);
      const MacaulayMatrix M = dense_macaulay(s);
      const int rho = n * d - n + 1;
      EXPECT_EQ(M.entries.rows(), binomial(rho + n, n));
      EXPECT_EQ(M.entries.cols(), n * binomial(rho - d + n, n));
    }
  }
}

TEST(DenseMacaulay, UnivariateLinear) {
  const PolynomialSystem s({Polynomial::monomial({1}) - Polynomial::constant(1, 3.0)}, {"x"}, Mode::kAffine);
  const MacaulayMatrix M = dense_macaulay(s);
  ASSERT_EQ(M.entries.rows(), 2);
  ASSERT_EQ(M.entries.cols(), 1);
  EXPECT_EQ(M.entries(0, 0), Complex(-3.0));
  EXPECT_EQ(M.entries(1, 0), Complex(1.0));
}

TEST(DenseMacaulay, ColumnsAreMultiples) {
  const PolynomialSystem s = affine_example();
  const MacaulayMatrix M = dense_macaulay(s);
  const std::vector<Complex> z{{0.3, 0.2}, {-0.4, 1.1}};
  Eigen::VectorXcd v(M.rows.size());
  for (std::size_t r = 0; r < M.rows.size(); ++r) v(r) = evaluate(Polynomial::monomial(M.rows[r]), z);
  for (std::size_t c = 0; c < M.columns.size(); ++c) {
    const auto& label = M.columns[c];
    const Complex expected = evaluate(Polynomial::monomial(label.multiplier), z) * evaluate(s.poly(label.generator), z);
    EXPECT_NEAR(std::abs(M.entries.col(c).cwiseProduct(v).sum() - expected), 0.0, 1e-12);
  }
}

TEST(DenseMacaulay, RejectsNonSquare) {
  const PolynomialSystem s({Polynomial::variable(2, 0)}, {"x", "y"}, Mode::kAffine);
  EXPECT_THROW(dense_macaulay(s), Error);
}

TEST(ToricMacaulay, RowsAreShiftedLatticePoints) {
  // Bilinear pair: P_i = unit square, rows from simplex + 2 squares.
  const auto bil = [](double a, double b, double c, double d) {
    return Polynomial::from_terms(2, {{a, {0, 0}}, {b, {1, 0}}, {c, {0, 1}}, {d, {1, 1}}});
  };
  const PolynomialSystem s({bil(2, -1, 2, 2), bil(4, -2, 1, 4)}, {"x1", "x2"}, Mode::kToric);
  const std::vector<double> v{-1e-3, -2e-3};
  const MacaulayMatrix M = toric_macaulay(s, v);
  const auto sum = minkowski_sum(
      std::vector<LatticePolytope>{LatticePolytope::simplex(2), LatticePolytope::cube(2), LatticePolytope::cube(2)}, 2);
  EXPECT_EQ(M.rows.monomials().size(), lattice_points(sum, v).size());
  for (const auto& c : M.columns) {
    for (const auto& t : s.poly(c.generator).terms()) {
      Exponents e = t.exponents;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += c.multiplier[i];
      EXPECT_TRUE(M.rows.contains(e));
    }
  }
}

TEST(ToricMacaulay, ShiftNearMinusOneGivesDenseRows) {
  const PolynomialSystem s = affine_example().with_mode(Mode::kToric);
  const std::vector<double> v{-(1 - 1e-3), -(1 - 1e-3)};
  const MacaulayMatrix M = toric_macaulay(s, v);
  EXPECT_EQ(M.rows.size(), 10u);
  EXPECT_EQ(M.columns.size(), 6u);
}

TEST(HomogeneousMacaulay, ProjectiveExample) {
  const PolynomialSystem s = cli::parse_system(slurp(data_path("example_projective.sys")));
  const MacaulayMatrix M = homogeneous_macaulay(s);
  EXPECT_EQ(M.degree, std::vector<int>{2});
  EXPECT_EQ(M.rows.size(), 6u);
  // f1 itself plus x0 f2, x1 f2, x2 f2.
  EXPECT_EQ(M.columns.size(), 4u);
  const MacaulayMatrix M3 = homogeneous_macaulay(s, 3);
  EXPECT_EQ(M3.rows.size(), 10u);
}

TEST(MultihomMacaulay, DegreeAndSurplus) {
  const PolynomialSystem s = cli::parse_system(slurp(data_path("example_multihom.sys")));
  const MacaulayMatrix M = multihom_macaulay(s);
  EXPECT_EQ(M.degree, (std::vector<int>{2, 2}));
  EXPECT_EQ(M.rows.size(), 9u);
  const MacaulayMatrix M1 = multihom_macaulay(s, 1);
  EXPECT_EQ(M1.degree, (std::vector<int>{3, 3}));
  EXPECT_EQ(M1.rows.size(), 16u);
  EXPECT_EQ(M1.columns.size(), 2u * 9u);
}

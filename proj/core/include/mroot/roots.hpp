#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mroot/quotient.hpp"
#include "mroot/system.hpp"

namespace mroot {

// Q unitary with m* = Q T* Q^H; T[i] = Q^H m_i Q.
struct SchurForm {
  Eigen::MatrixXcd Q;
  Eigen::MatrixXcd Tstar;
  std::vector<Eigen::MatrixXcd> T;
  Eigen::VectorXcd weights;  // m* = sum_i weights(i) m_i
};

// One complex Schur decomposition of a random combination of the
// matrices, applied to all of them. Throws kCommutator when the relative
// commutator norm exceeds tol_commute, kSchur if the QR iteration fails.
SchurForm simultaneous_schur(const std::vector<Eigen::MatrixXcd>& mats, std::uint64_t seed,
                             double tol_commute = 1e-8);

// Single-linkage clusters of the values with threshold tol, each sorted,
// ordered by first member.
std::vector<std::vector<int>> cluster_values(const Eigen::VectorXcd& values, double tol);

// Swaps diagonal entries k and k + 1 of the triangular form by a Givens
// rotation, updating Q, T* and every T_i.
void swap_schur_adjacent(SchurForm& form, long k);

struct ClusteredSchur {
  SchurForm form;
  // Consecutive diagonal ranges [begin, begin + size).
  std::vector<std::pair<long, long>> clusters;
  bool reordered = true;
  std::string warning;
};

// Makes equal (within tol) diagonal entries of T* adjacent. When the
// reordered factorization loses accuracy, returns the original one with
// singleton clusters and a warning.
ClusteredSchur cluster_reorder(SchurForm form, double tol);

struct PencilEigenvalue {
  Complex alpha;
  Complex beta;
  bool infinite = false;
  Complex value;  // alpha / beta when finite
};

// Generalized eigenvalues of A v = lambda B v. Throws kDegeneratePencil
// when alpha and beta vanish together.
std::vector<PencilEigenvalue> pencil_eigenvalues(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                                 double tol = 1e-10);

struct Root {
  // Affine coordinates, or all homogeneous coordinates with every block
  // scaled so its largest-modulus entry is exactly 1.
  std::vector<Complex> coords;
  // Affine chart x_ij / x_i0, when every x_i0 is nonzero (projective and
  // multihom only).
  std::optional<std::vector<Complex>> affine;
  int multiplicity = 1;
  double residual = 0.0;
  double cluster_diameter = 0.0;
};

struct Timings {
  double t_M = 0.0;
  double t_N = 0.0;
  double t_B = 0.0;
  double t_S = 0.0;
  double t_alg = 0.0;
};

struct Diagnostics {
  double cond = 0.0;
  double gap = 0.0;
  double null_residual = 0.0;
  double commutator = 0.0;
  double schur_unitarity = 0.0;  // ||Q^H Q - I||
  double schur_residual = 0.0;   // ||Q^H m* Q - T*|| / ||m*||
  double triangularity = 0.0;    // max_i ||strict lower part of T_i|| / ||m_i||
  int macaulay_rows = 0;
  int macaulay_columns = 0;
  int clusters = 0;
};

struct RootSet {
  std::vector<Root> roots;
  Mode mode = Mode::kAffine;
  std::uint64_t seed = 0;
  int delta = 0;
  VariableBlocks blocks;
  Timings timings;
  Diagnostics diagnostics;
  std::vector<std::string> warnings;
};

// max_i |f_i(z)| / (||f_i||_1 max(1, ||z||_inf)^{d_i}).
double residual(const PolynomialSystem& system, std::span<const Complex> z);

// Roots from one shared Schur form of the multiplication matrices.
// `system` is the input system (roots are reported in its coordinates).
RootSet extract_roots(const QuotientRep& qrep, const PolynomialSystem& system, std::uint64_t seed,
                      const Tolerances& tol = {});

}  // namespace mroot

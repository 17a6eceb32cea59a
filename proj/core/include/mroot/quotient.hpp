#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mroot/macaulay.hpp"
#include "mroot/random.hpp"
#include "mroot/system.hpp"

namespace mroot {

struct Tolerances {
  double null = 1e-10;         // ||N M|| <= null * ||M||
  double commute = 1e-8;       // relative commutator bound
  double cluster_rel = 1e-6;   // clustering radius relative to 1 + max |diag|
  double gap_min = 1e3;        // minimal singular value gap at delta
  double cond_max = 1e12;      // cond(N*) above this only warns
};

// Rows of N span the left null space of M.
struct NullSpaceMap {
  Eigen::MatrixXcd N;  // delta x rows(M)
  int delta = 0;
  // sigma_{m-delta} / sigma_{m-delta+1} over the m singular values of M,
  // padded with zeros when M has fewer columns than rows. For matrices
  // with more than 4000 rows N comes from column-pivoted QR and the
  // |R(i, i)| stand in for the singular values.
  double gap = 0.0;
  // ||N M||_2 / ||M||_2.
  double residual = 0.0;
  Eigen::VectorXd singular_values;
};

// Throws kGenericity when the gap is below tol.gap_min or the residual
// exceeds tol.null.
NullSpaceMap null_space(const Eigen::MatrixXcd& M, int delta, const Tolerances& tol = {});
NullSpaceMap null_space(const MacaulayMatrix& M, int delta, const Tolerances& tol = {});

// Monomials of W: degree < rho (dense), alpha with every alpha + e_i a row
// (toric). For projective and multihom matrices, the degree rho - 1
// monomials over which the basis is chosen.
std::vector<Exponents> w_monomials(const MacaulayMatrix& M, const VariableBlocks& blocks);

// Columns of N at the given monomials. Throws kEmptyW for an empty list.
Eigen::MatrixXcd restrict_to(const Eigen::MatrixXcd& N, const MonomialIndex& rows,
                             const std::vector<Exponents>& monomials);

struct BasisChoice {
  std::vector<int> columns;  // positions within the candidate list
  std::vector<Exponents> monomials;
  Eigen::MatrixXcd nstar;
  double cond = 0.0;
};

// First delta pivots of column-pivoted QR of N_W. Throws kSurjectivity if
// N_W has numerical rank below delta.
BasisChoice select_basis(const Eigen::MatrixXcd& NW, const std::vector<Exponents>& candidates, int delta);

// Uses the given monomials as the basis instead of pivoting.
BasisChoice forced_basis(const Eigen::MatrixXcd& NW, const std::vector<Exponents>& candidates,
                         const std::vector<Exponents>& basis);

struct BuildTimings {
  double t_M = 0.0;  // Macaulay matrix construction
  double t_N = 0.0;  // null space
  double t_B = 0.0;  // basis selection and multiplication matrices
};

struct QuotientRep {
  Mode mode = Mode::kAffine;
  int delta = 0;
  std::vector<Exponents> basis;
  Eigen::MatrixXcd nstar;
  // One per variable, in variable order: N_i (affine, toric) or N_ij
  // (projective, multihom; x_i / h or x_ij / h_i).
  std::vector<Eigen::MatrixXcd> shifted;
  std::vector<Eigen::MatrixXcd> mult;
  VariableBlocks blocks;

  // Projective and multihom only: candidate monomials of degree rho - 1
  // and the full matrices N_{W_i} (or N K_ij) over them, plus N_h.
  std::vector<Exponents> candidates;
  std::vector<Eigen::MatrixXcd> restricted;
  Eigen::MatrixXcd nh;
  // Linear forms h_i used (projective: one; multihom: one per block).
  std::vector<Polynomial> forms;
  // Roots of the input system are back_transform * (computed roots);
  // identity unless multihom preconditioning was applied.
  Eigen::MatrixXcd back_transform;

  double cond = 0.0;
  double gap = 0.0;
  double null_residual = 0.0;
  double commutator = 0.0;
  Eigen::VectorXd singular_values;
  int macaulay_rows = 0;
  int macaulay_columns = 0;
  BuildTimings timings;
  std::vector<std::string> warnings;
};

struct BuildOptions {
  std::uint64_t seed = kDefaultSeed;
  Tolerances tol;
  // Toric lattice shift; drawn from the seed when absent.
  std::optional<std::vector<double>> shift;
  // Multihom: random block-diagonal unitary change of coordinates.
  bool precondition = true;
  // Explicit generic forms h (projective: one form in all variables;
  // multihom: one per block, in all variables).
  std::vector<Polynomial> forms;
  // Forced basis monomials instead of pivoted QR.
  std::vector<Exponents> basis;
  // Projective degree override and multihom per-block degree surplus.
  std::optional<int> degree;
  int degree_surplus = 0;
  int retries = 3;
};

// The Macaulay matrix the pipeline for system.mode() starts from (for
// multihom systems, before the preconditioning change of coordinates).
MacaulayMatrix macaulay_matrix(const PolynomialSystem& system, const BuildOptions& options = {});

// Root count used by each pipeline: Bezout, BKK, multihomogeneous Bezout.
std::int64_t expected_root_count(const PolynomialSystem& system);

// Remaining stages for a given null space (for example an exact
// Vandermonde one). `system` must be the system M was built from.
QuotientRep quotient_from_null_space(const PolynomialSystem& system, const MacaulayMatrix& M,
                                     const Eigen::MatrixXcd& N, const BuildOptions& options = {});

QuotientRep build_affine(const PolynomialSystem& system, const BuildOptions& options = {});
QuotientRep build_toric(const PolynomialSystem& system, const BuildOptions& options = {});
QuotientRep build_projective(const PolynomialSystem& system, const BuildOptions& options = {});
QuotientRep build_multihom(const PolynomialSystem& system, const BuildOptions& options = {});
// Dispatches on system.mode().
QuotientRep build(const PolynomialSystem& system, const BuildOptions& options = {});

// Largest relative commutator ||m_i m_j - m_j m_i|| / max(||m_i||, ||m_j||).
double commutator_norm(const std::vector<Eigen::MatrixXcd>& mats);

// Spectral norm (exact for small matrices, power iteration otherwise).
double spectral_norm(const Eigen::MatrixXcd& A);

struct RegularityReport {
  bool regular = false;
  int delta = 0;
  int nullity = 0;
  int rank = 0;
  // sigma_delta / sigma_1 of N_h (0 when N_h has fewer than delta columns).
  double sigma_ratio = 0.0;
};

// Surjectivity of N_h : S_{d-1} -> C^delta for a seeded random h, given a
// delta x |S_d| matrix N whose columns follow `rows`.
RegularityReport regularity_check(const Eigen::MatrixXcd& N, const MonomialIndex& rows, int nvars, int d,
                                  std::uint64_t seed);
// Same test on the numerical left null space of the degree-d homogeneous
// Macaulay matrix of a projective system.
RegularityReport regularity_check(const PolynomialSystem& system, int d, std::uint64_t seed);

}  // namespace mroot

#pragma once

#include <vector>

#include <Eigen/Core>

namespace mroot::lapack {

// All left singular vectors (m x m) and the min(m, n) singular values in
// descending order.
struct LeftSvd {
  Eigen::MatrixXcd U;
  Eigen::VectorXd s;
};
LeftSvd left_svd(const Eigen::MatrixXcd& A);

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& A);

// Column-pivoted QR A P = Q R (zgeqp3): zero-based pivot order and |R(i, i)|.
struct PivotedQr {
  std::vector<int> pivots;
  Eigen::VectorXd rdiag;
};
PivotedQr pivoted_qr(const Eigen::MatrixXcd& A);

// Orthonormal basis of the last k left vectors from column-pivoted QR,
// A P = Q R: Q(:, m - k : m). rdiag holds |R(i, i)|.
struct PivotedQrComplement {
  Eigen::MatrixXcd Q;
  Eigen::VectorXd rdiag;
};
PivotedQrComplement pivoted_qr_complement(const Eigen::MatrixXcd& A, long k);

// Complex Schur form A = Q T Q^H (zgees, no reordering). Returns false
// when the QR iteration fails.
bool complex_schur(const Eigen::MatrixXcd& A, Eigen::MatrixXcd& Q, Eigen::MatrixXcd& T);

// Generalized eigenvalues alpha_j / beta_j of A v = lambda B v.
void generalized_eigenvalues(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, Eigen::VectorXcd& alpha,
                             Eigen::VectorXcd& beta);

}  // namespace mroot::lapack

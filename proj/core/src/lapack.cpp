#include "lapack.hpp"

#include <complex>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "mroot/error.hpp"

namespace mroot::lapack {

namespace {

lapack_int dim(long v) { return static_cast<lapack_int>(v); }

void check(lapack_int info, const char* routine) {
  if (info != 0) {
    throw Error(ErrorKind::kConsistency, std::string(routine) + " failed with info " + std::to_string(info));
  }
}

}  // namespace

LeftSvd left_svd(const Eigen::MatrixXcd& A) {
  const long m = A.rows();
  const long n = A.cols();
  LeftSvd out;
  if (n == 0 || m == 0) {
    out.U = Eigen::MatrixXcd::Identity(m, m);
    out.s.resize(0);
    return out;
  }
  Eigen::MatrixXcd work = A;
  const long k = std::min(m, n);
  out.s.resize(k);
  out.U.resize(m, m);
  if (n >= m) {
    // 'S' already yields all m left vectors.
    Eigen::MatrixXcd vt(k, n);
    check(LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', dim(m), dim(n), work.data(), dim(m), out.s.data(), out.U.data(),
                         dim(m), vt.data(), dim(k)),
          "zgesdd");
  } else {
    // zgesdd with jobz = 'A' on tall input returned a non-unitary U on the
    // reference LAPACK shipped here (560 x 495 dense case), so use zgesvd.
    Eigen::VectorXd superb(k);
    check(LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'A', 'N', dim(m), dim(n), work.data(), dim(m), out.s.data(),
                         out.U.data(), dim(m), nullptr, 1, superb.data()),
          "zgesvd");
  }
  return out;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& A) {
  const long m = A.rows();
  const long n = A.cols();
  Eigen::VectorXd s(std::min(m, n));
  if (s.size() == 0) return s;
  Eigen::MatrixXcd work = A;
  check(LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', dim(m), dim(n), work.data(), dim(m), s.data(), nullptr, 1, nullptr, 1),
        "zgesdd");
  return s;
}

PivotedQr pivoted_qr(const Eigen::MatrixXcd& A) {
  const long m = A.rows();
  const long n = A.cols();
  const long r = std::min(m, n);
  PivotedQr out;
  out.rdiag.resize(r);
  if (r == 0) return out;
  Eigen::MatrixXcd work = A;
  std::vector<lapack_int> jpvt(n, 0);
  Eigen::VectorXcd tau(r);
  check(LAPACKE_zgeqp3(LAPACK_COL_MAJOR, dim(m), dim(n), work.data(), dim(m), jpvt.data(), tau.data()), "zgeqp3");
  for (long i = 0; i < r; ++i) out.rdiag(i) = std::abs(work(i, i));
  out.pivots.reserve(n);
  for (lapack_int j : jpvt) out.pivots.push_back(static_cast<int>(j) - 1);
  return out;
}

PivotedQrComplement pivoted_qr_complement(const Eigen::MatrixXcd& A, long k) {
  const long m = A.rows();
  const long n = A.cols();
  const long r = std::min(m, n);
  PivotedQrComplement out;
  out.Q = Eigen::MatrixXcd::Zero(m, k);
  out.Q.bottomRows(k).setIdentity();
  out.rdiag.resize(r);
  if (r == 0) return out;
  Eigen::MatrixXcd work = A;
  std::vector<lapack_int> jpvt(n, 0);
  Eigen::VectorXcd tau(r);
  check(LAPACKE_zgeqp3(LAPACK_COL_MAJOR, dim(m), dim(n), work.data(), dim(m), jpvt.data(), tau.data()), "zgeqp3");
  for (long i = 0; i < r; ++i) out.rdiag(i) = std::abs(work(i, i));
  check(LAPACKE_zunmqr(LAPACK_COL_MAJOR, 'L', 'N', dim(m), dim(k), dim(r), work.data(), dim(m), tau.data(),
                       out.Q.data(), dim(m)),
        "zunmqr");
  return out;
}

bool complex_schur(const Eigen::MatrixXcd& A, Eigen::MatrixXcd& Q, Eigen::MatrixXcd& T) {
  const long n = A.rows();
  T = A;
  Q.resize(n, n);
  if (n == 0) return true;
  Eigen::VectorXcd w(n);
  lapack_int sdim = 0;
  const lapack_int info = LAPACKE_zgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, dim(n), T.data(), dim(n), &sdim,
                                        w.data(), Q.data(), dim(n));
  if (info < 0) check(info, "zgees");
  // Keep T exactly triangular.
  T.triangularView<Eigen::StrictlyLower>().setZero();
  return info == 0;
}

void generalized_eigenvalues(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, Eigen::VectorXcd& alpha,
                             Eigen::VectorXcd& beta) {
  const long n = A.rows();
  Eigen::MatrixXcd a = A;
  Eigen::MatrixXcd b = B;
  alpha.resize(n);
  beta.resize(n);
  if (n == 0) return;
  check(LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', dim(n), a.data(), dim(n), b.data(), dim(n), alpha.data(),
                      beta.data(), nullptr, 1, nullptr, 1),
        "zggev");
}

}  // namespace mroot::lapack

#include "mroot/random.hpp"

#include <Eigen/QR>

namespace mroot {

Eigen::MatrixXcd random_unitary(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd g(n, n);
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < n; ++i) g(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  // Fix the phases so the distribution does not depend on the QR sign
  // convention.
  for (long j = 0; j < n; ++j) {
    const auto r = qr.matrixQR()(j, j);
    if (std::abs(r) > 0) q.col(j) *= r / std::abs(r);
  }
  return q;
}

}  // namespace mroot

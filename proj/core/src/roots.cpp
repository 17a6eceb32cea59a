#include "mroot/roots.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lapack.hpp"
#include "mroot/error.hpp"

namespace mroot {

namespace {

using Clock = std::chrono::steady_clock;

// Largest acceptable growth of the factorization residual caused by
// reordering, relative to ||T*||.
constexpr double kReorderTolerance = 1e-8;
// Chart coordinate x_i0 counts as nonzero above this (after per-block
// normalization to max modulus 1).
constexpr double kChartThreshold = 1e-8;

SchurForm schur_of(const std::vector<Eigen::MatrixXcd>& mats, std::uint64_t seed) {
  if (mats.empty()) throw Error(ErrorKind::kInvalidArgument, "no matrices to decompose");
  const long n = mats[0].rows();
  SchurForm form;
  form.weights = random_unit_complex(static_cast<long>(mats.size()), derive_seed(seed, 300));
  Eigen::MatrixXcd mstar = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != n || mats[i].cols() != n) {
      throw Error(ErrorKind::kDimensionMismatch, "matrices must be square of one size");
    }
    mstar += form.weights(static_cast<long>(i)) * mats[i];
  }
  if (!lapack::complex_schur(mstar, form.Q, form.Tstar)) {
    throw Error(ErrorKind::kSchur, "complex Schur iteration did not converge");
  }
  for (const auto& m : mats) form.T.push_back(form.Q.adjoint() * m * form.Q);
  return form;
}

void rotate(Eigen::MatrixXcd& T, long k, const Complex g[2][2]) {
  for (long r = 0; r < T.rows(); ++r) {
    const Complex u = T(r, k);
    const Complex v = T(r, k + 1);
    T(r, k) = u * g[0][0] + v * g[1][0];
    T(r, k + 1) = u * g[0][1] + v * g[1][1];
  }
  for (long c = 0; c < T.cols(); ++c) {
    const Complex u = T(k, c);
    const Complex v = T(k + 1, c);
    T(k, c) = std::conj(g[0][0]) * u + std::conj(g[1][0]) * v;
    T(k + 1, c) = std::conj(g[0][1]) * u + std::conj(g[1][1]) * v;
  }
}

double relative_norm(const Eigen::MatrixXcd& diff, const Eigen::MatrixXcd& scale) {
  const double s = spectral_norm(scale);
  return s > 0 ? spectral_norm(diff) / s : spectral_norm(diff);
}

std::string format(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

bool lex_less(const Root& a, const Root& b) {
  for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
    if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
    if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
  }
  return false;
}

}  // namespace

SchurForm simultaneous_schur(const std::vector<Eigen::MatrixXcd>& mats, std::uint64_t seed, double tol_commute) {
  const double c = commutator_norm(mats);
  if (c > tol_commute) {
    throw Error(ErrorKind::kCommutator, "multiplication matrices do not commute: relative commutator " + format(c));
  }
  return schur_of(mats, seed);
}

std::vector<std::vector<int>> cluster_values(const Eigen::VectorXcd& values, double tol) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(values(i) - values(j)) <= tol) {
        const int a = find(i);
        const int b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<int>> clusters;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[r]].push_back(i);
  }
  return clusters;
}

void swap_schur_adjacent(SchurForm& form, long k) {
  const Complex a = form.Tstar(k, k);
  const Complex b = form.Tstar(k, k + 1);
  const Complex c = form.Tstar(k + 1, k + 1);
  // First column: eigenvector of the 2x2 block for the eigenvalue c.
  const double norm = std::hypot(std::abs(b), std::abs(c - a));
  if (norm == 0.0) return;
  const Complex x1 = b / norm;
  const Complex x2 = (c - a) / norm;
  const Complex g[2][2] = {{x1, -std::conj(x2)}, {x2, std::conj(x1)}};
  rotate(form.Tstar, k, g);
  form.Tstar(k + 1, k) = 0.0;
  for (auto& T : form.T) rotate(T, k, g);
  for (long r = 0; r < form.Q.rows(); ++r) {
    const Complex u = form.Q(r, k);
    const Complex v = form.Q(r, k + 1);
    form.Q(r, k) = u * g[0][0] + v * g[1][0];
    form.Q(r, k + 1) = u * g[0][1] + v * g[1][1];
  }
}

ClusteredSchur cluster_reorder(SchurForm form, double tol) {
  const long n = form.Tstar.rows();
  const auto groups = cluster_values(form.Tstar.diagonal(), tol);
  std::vector<int> id(n);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int i : groups[g]) id[i] = static_cast<int>(g);
  }

  ClusteredSchur out;
  const SchurForm original = form;
  bool swapped = false;
  // Bubble sort by cluster label using adjacent swaps.
  for (long pass = 0; pass < n; ++pass) {
    bool any = false;
    for (long k = 0; k + 1 < n; ++k) {
      if (id[k] > id[k + 1]) {
        swap_schur_adjacent(form, k);
        std::swap(id[k], id[k + 1]);
        any = swapped = true;
      }
    }
    if (!any) break;
  }

  if (swapped) {
    const Eigen::MatrixXcd before = original.Q * original.Tstar * original.Q.adjoint();
    const Eigen::MatrixXcd after = form.Q * form.Tstar * form.Q.adjoint();
    const double drift = relative_norm(after - before, original.Tstar);
    const double unitarity =
        spectral_norm(form.Q.adjoint() * form.Q - Eigen::MatrixXcd::Identity(n, n));
    if (drift > kReorderTolerance || unitarity > kReorderTolerance) {
      out.form = original;
      out.reordered = false;
      out.warning = "Schur reordering lost accuracy (drift " + format(drift) +
                    "); reporting every eigenvalue as a simple root";
      for (long i = 0; i < n; ++i) out.clusters.emplace_back(i, 1);
      return out;
    }
  }
  out.form = std::move(form);
  for (long i = 0; i < n;) {
    long j = i;
    while (j < n && id[j] == id[i]) ++j;
    out.clusters.emplace_back(i, j - i);
    i = j;
  }
  return out;
}

std::vector<PencilEigenvalue> pencil_eigenvalues(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, double tol) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "pencil matrices must be square of one size");
  }
  Eigen::VectorXcd alpha, beta;
  lapack::generalized_eigenvalues(A, B, alpha, beta);
  const double na = std::max(A.norm(), std::numeric_limits<double>::min());
  const double nb = std::max(B.norm(), std::numeric_limits<double>::min());
  std::vector<PencilEigenvalue> out;
  for (long j = 0; j < alpha.size(); ++j) {
    PencilEigenvalue e;
    e.alpha = alpha(j);
    e.beta = beta(j);
    const bool alpha_zero = std::abs(e.alpha) <= tol * na;
    const bool beta_zero = std::abs(e.beta) <= tol * nb;
    if (alpha_zero && beta_zero) {
      throw Error(ErrorKind::kDegeneratePencil, "singular pencil: the matrices share a null vector");
    }
    e.infinite = beta_zero;
    if (!e.infinite) e.value = e.alpha / e.beta;
    out.push_back(e);
  }
  return out;
}

double residual(const PolynomialSystem& system, std::span<const Complex> z) {
  double zmax = 1.0;
  for (const auto& c : z) zmax = std::max(zmax, std::abs(c));
  double worst = 0.0;
  for (const auto& p : system.polys()) {
    const Polynomial q = system.mode() == Mode::kToric ? shift_to_nonnegative(p).first : p;
    const double scale = norm1(q) * std::pow(zmax, total_degree(q));
    worst = std::max(worst, std::abs(evaluate(q, z)) / scale);
  }
  return worst;
}

RootSet extract_roots(const QuotientRep& qrep, const PolynomialSystem& system, std::uint64_t seed,
                      const Tolerances& tol) {
  const auto start = Clock::now();
  if (qrep.commutator > tol.commute) {
    throw Error(ErrorKind::kCommutator, "multiplication matrices do not commute: relative commutator " +
                                            format(qrep.commutator));
  }
  SchurForm form = schur_of(qrep.mult, seed);
  const long delta = form.Tstar.rows();
  double dmax = 0.0;
  for (long i = 0; i < delta; ++i) dmax = std::max(dmax, std::abs(form.Tstar(i, i)));
  ClusteredSchur clustered = cluster_reorder(std::move(form), tol.cluster_rel * (1.0 + dmax));

  RootSet set;
  set.mode = qrep.mode;
  set.seed = seed;
  set.delta = qrep.delta;
  set.blocks = system.blocks();
  set.warnings = qrep.warnings;
  if (!clustered.warning.empty()) set.warnings.push_back(clustered.warning);

  const auto& f = clustered.form;
  const auto& blocks = system.blocks();
  const bool homogeneous = qrep.mode == Mode::kProjective || qrep.mode == Mode::kMultihom;
  const long nvars = static_cast<long>(f.T.size());
  for (const auto& [begin, size] : clustered.clusters) {
    Eigen::VectorXcd values(nvars);
    for (long i = 0; i < nvars; ++i) values(i) = f.T[i].block(begin, begin, size, size).trace() / double(size);
    Root root;
    root.multiplicity = static_cast<int>(size);
    for (long a = begin; a < begin + size; ++a) {
      for (long b = a + 1; b < begin + size; ++b) {
        root.cluster_diameter = std::max(root.cluster_diameter, std::abs(f.Tstar(a, a) - f.Tstar(b, b)));
      }
    }
    Eigen::VectorXcd x = qrep.back_transform * values;
    if (homogeneous) {
      std::vector<Complex> chart;
      bool chart_ok = true;
      for (int b = 0; b < blocks.block_count(); ++b) {
        const long s = blocks.begin(b);
        const long w = blocks.width(b);
        long arg = s;
        for (long j = s; j < s + w; ++j) {
          if (std::abs(x(j)) > std::abs(x(arg))) arg = j;
        }
        const Complex pivot = x(arg);
        if (pivot != Complex(0.0)) x.segment(s, w) /= pivot;
        x(arg) = 1.0;
        if (std::abs(x(s)) > kChartThreshold) {
          for (long j = s + 1; j < s + w; ++j) chart.push_back(x(j) / x(s));
        } else {
          chart_ok = false;
        }
      }
      if (chart_ok) root.affine = std::move(chart);
    }
    root.coords.assign(x.data(), x.data() + x.size());
    root.residual = residual(system, root.coords);
    set.roots.push_back(std::move(root));
  }
  std::sort(set.roots.begin(), set.roots.end(), lex_less);

  auto& d = set.diagnostics;
  d.cond = qrep.cond;
  d.gap = qrep.gap;
  d.null_residual = qrep.null_residual;
  d.commutator = qrep.commutator;
  d.macaulay_rows = qrep.macaulay_rows;
  d.macaulay_columns = qrep.macaulay_columns;
  d.clusters = static_cast<int>(clustered.clusters.size());
  d.schur_unitarity = spectral_norm(f.Q.adjoint() * f.Q - Eigen::MatrixXcd::Identity(delta, delta));
  Eigen::MatrixXcd mstar = Eigen::MatrixXcd::Zero(delta, delta);
  for (long i = 0; i < nvars; ++i) mstar += f.weights(i) * qrep.mult[i];
  d.schur_residual = relative_norm(f.Q.adjoint() * mstar * f.Q - f.Tstar, mstar);
  for (long i = 0; i < nvars; ++i) {
    const Eigen::MatrixXcd lower = f.T[i].triangularView<Eigen::StrictlyLower>();
    const double scale = spectral_norm(qrep.mult[i]);
    if (scale > 0) d.triangularity = std::max(d.triangularity, spectral_norm(lower) / scale);
  }

  set.timings.t_M = qrep.timings.t_M;
  set.timings.t_N = qrep.timings.t_N;
  set.timings.t_B = qrep.timings.t_B;
  set.timings.t_S = std::chrono::duration<double>(Clock::now() - start).count();
  set.timings.t_alg = set.timings.t_M + set.timings.t_N + set.timings.t_B + set.timings.t_S;
  return set;
}

}  // namespace mroot

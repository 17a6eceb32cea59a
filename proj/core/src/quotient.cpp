#include "mroot/quotient.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/QR>

#include "lapack.hpp"
#include "mroot/error.hpp"
#include "mroot/polytope.hpp"

namespace mroot {

namespace {

// Above this many rows the null space comes from pivoted QR instead of
// the full SVD, whose workspace grows like rows^2.
constexpr long kSvdRowLimit = 4000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// |R_{delta-1}| / |R_0| below this counts as rank deficient.
constexpr double kRankRatio = 1e-13;

std::string format(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Exponents plus_unit(Exponents e, int var) {
  ++e[var];
  return e;
}

// Linear form in `width` variables placed at `offset` in `total` variables.
Polynomial embed(const Polynomial& p, int offset, int total) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponents e(total, 0);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) e[offset + i] = t.exponents[i];
    terms.push_back({t.coefficient, std::move(e)});
  }
  return Polynomial::from_terms(total, std::move(terms));
}

std::vector<Complex> linear_coefficients(const Polynomial& h, int nvars) {
  if (h.nvars() != nvars) throw Error(ErrorKind::kDimensionMismatch, "linear form has the wrong number of variables");
  std::vector<Complex> c(nvars);
  for (const auto& t : h.terms()) {
    if (degree(t.exponents) != 1) throw Error(ErrorKind::kInvalidArgument, "h must be a linear form");
    for (int i = 0; i < nvars; ++i) {
      if (t.exponents[i] == 1) c[i] = t.coefficient;
    }
  }
  return c;
}

Eigen::MatrixXcd multiplication(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu, const Eigen::MatrixXcd& shifted) {
  return lu.solve(shifted);
}

double condition_number(const Eigen::MatrixXcd& A) {
  const Eigen::VectorXd s = lapack::singular_values(A);
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  return smin > 0 ? s(0) / smin : std::numeric_limits<double>::infinity();
}

void finish(QuotientRep& q, const Tolerances& tol) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(q.nstar);
  q.mult.clear();
  for (const auto& Ni : q.shifted) q.mult.push_back(multiplication(lu, Ni));
  q.commutator = commutator_norm(q.mult);
  if (q.cond > tol.cond_max) {
    q.warnings.push_back("cond(N*) = " + format(q.cond) + " exceeds " + format(tol.cond_max));
  }
  if (q.commutator > tol.commute) {
    q.warnings.push_back("commutator norm " + format(q.commutator) + " exceeds " + format(tol.commute));
  }
}

QuotientRep affine_stage(const PolynomialSystem& system, const MacaulayMatrix& M, const Eigen::MatrixXcd& N,
                         const BuildOptions& options) {
  const int delta = static_cast<int>(N.rows());
  const auto candidates = w_monomials(M, system.blocks());
  const Eigen::MatrixXcd NW = restrict_to(N, M.rows, candidates);
  const BasisChoice choice =
      options.basis.empty() ? select_basis(NW, candidates, delta) : forced_basis(NW, candidates, options.basis);

  QuotientRep q;
  q.mode = M.mode;
  q.delta = delta;
  q.basis = choice.monomials;
  q.nstar = choice.nstar;
  q.cond = choice.cond;
  q.blocks = system.blocks();
  for (int i = 0; i < system.varcount(); ++i) {
    std::vector<Exponents> moved;
    for (const auto& b : q.basis) moved.push_back(plus_unit(b, i));
    q.shifted.push_back(restrict_to(N, M.rows, moved));
  }
  q.back_transform = Eigen::MatrixXcd::Identity(system.varcount(), system.varcount());
  finish(q, options.tol);
  return q;
}

QuotientRep projective_stage(const PolynomialSystem& system, const MacaulayMatrix& M, const Eigen::MatrixXcd& N,
                             const BuildOptions& options) {
  const int delta = static_cast<int>(N.rows());
  const int nvars = system.varcount();
  QuotientRep q;
  q.mode = Mode::kProjective;
  q.delta = delta;
  q.blocks = system.blocks();
  q.candidates = w_monomials(M, system.blocks());
  for (int i = 0; i < nvars; ++i) {
    std::vector<Exponents> moved;
    for (const auto& b : q.candidates) moved.push_back(plus_unit(b, i));
    q.restricted.push_back(restrict_to(N, M.rows, moved));
  }

  const int attempts = options.forms.empty() ? std::max(1, options.retries) : 1;
  std::optional<BasisChoice> choice;
  for (int attempt = 0; attempt < attempts && !choice; ++attempt) {
    const Polynomial h = options.forms.empty() ? random_linear_form(nvars, derive_seed(options.seed, 100 + attempt))
                                               : options.forms.at(0);
    const auto c = linear_coefficients(h, nvars);
    Eigen::MatrixXcd nh = Eigen::MatrixXcd::Zero(delta, static_cast<long>(q.candidates.size()));
    for (int i = 0; i < nvars; ++i) nh += c[i] * q.restricted[i];
    try {
      choice = options.basis.empty() ? select_basis(nh, q.candidates, delta)
                                     : forced_basis(nh, q.candidates, options.basis);
      q.forms = {h};
      q.nh = std::move(nh);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSurjectivity) throw;
    }
  }
  if (!choice) {
    throw Error(ErrorKind::kRegularity, "N_h is not surjective for " + std::to_string(attempts) +
                                            " random forms h; the ideal is not regular in degree " +
                                            std::to_string(M.degree.at(0)));
  }
  q.basis = choice->monomials;
  q.nstar = choice->nstar;
  q.cond = choice->cond;
  for (const auto& R : q.restricted) q.shifted.push_back(R(Eigen::all, choice->columns));
  q.back_transform = Eigen::MatrixXcd::Identity(nvars, nvars);
  finish(q, options.tol);
  return q;
}

// Coefficient vector of p in the row index.
void scatter(const Polynomial& p, const MonomialIndex& rows, Eigen::MatrixXcd& K, long col) {
  for (const auto& t : p.terms()) {
    const long r = rows.find(t.exponents);
    if (r < 0) throw Error(ErrorKind::kConsistency, "K column has a term outside the row space");
    K(r, col) += t.coefficient;
  }
}

QuotientRep multihom_stage(const PolynomialSystem& system, const MacaulayMatrix& M, const Eigen::MatrixXcd& N,
                           const BuildOptions& options) {
  const int delta = static_cast<int>(N.rows());
  const int nvars = system.varcount();
  const auto& blocks = system.blocks();
  const int k = blocks.block_count();
  QuotientRep q;
  q.mode = Mode::kMultihom;
  q.delta = delta;
  q.blocks = blocks;
  q.candidates = w_monomials(M, blocks);
  const long nc = static_cast<long>(q.candidates.size());
  const long nrows = static_cast<long>(M.rows.size());

  if (!options.forms.empty() && static_cast<int>(options.forms.size()) != k) {
    throw Error(ErrorKind::kDimensionMismatch, "need one linear form per block");
  }
  const int attempts = options.forms.empty() ? std::max(1, options.retries) : 1;
  std::optional<BasisChoice> choice;
  for (int attempt = 0; attempt < attempts && !choice; ++attempt) {
    std::vector<Polynomial> forms;
    for (int b = 0; b < k; ++b) {
      if (options.forms.empty()) {
        const auto seed = derive_seed(options.seed, 200 + 16 * attempt + b);
        forms.push_back(embed(random_linear_form(blocks.width(b), seed), blocks.begin(b), nvars));
      } else {
        forms.push_back(options.forms[b]);
        linear_coefficients(forms.back(), nvars);
      }
    }
    // Products of all forms but one.
    std::vector<Polynomial> except(k, Polynomial::constant(nvars, 1.0));
    for (int b = 0; b < k; ++b) {
      for (int l = 0; l < k; ++l) {
        if (l != b) except[b] = except[b] * forms[l];
      }
    }
    const Polynomial all = except[0] * forms[0];

    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(nrows, nc);
    for (long c = 0; c < nc; ++c) scatter(all.shifted(q.candidates[c]), M.rows, K, c);
    Eigen::MatrixXcd nh = N * K;
    try {
      choice = options.basis.empty() ? select_basis(nh, q.candidates, delta)
                                     : forced_basis(nh, q.candidates, options.basis);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSurjectivity) throw;
      continue;
    }
    q.forms = forms;
    q.nh = std::move(nh);
    q.restricted.clear();
    for (int b = 0; b < k; ++b) {
      for (int j = 0; j < blocks.width(b); ++j) {
        const int var = blocks.begin(b) + j;
        Eigen::MatrixXcd Kij = Eigen::MatrixXcd::Zero(nrows, nc);
        Exponents e(nvars, 0);
        e[var] = 1;
        const Polynomial base = except[b].shifted(e);
        for (long c = 0; c < nc; ++c) scatter(base.shifted(q.candidates[c]), M.rows, Kij, c);
        q.restricted.push_back(N * Kij);
      }
    }
  }
  if (!choice) {
    throw Error(ErrorKind::kRegularity, "N_h is not surjective for " + std::to_string(attempts) +
                                            " random choices of h_1, ..., h_k");
  }
  q.basis = choice->monomials;
  q.nstar = choice->nstar;
  q.cond = choice->cond;
  for (const auto& R : q.restricted) q.shifted.push_back(R(Eigen::all, choice->columns));
  q.back_transform = Eigen::MatrixXcd::Identity(nvars, nvars);
  finish(q, options.tol);
  return q;
}

void record_null_space(QuotientRep& q, const NullSpaceMap& ns, const MacaulayMatrix& M) {
  q.gap = ns.gap;
  q.null_residual = ns.residual;
  q.singular_values = ns.singular_values;
  q.macaulay_rows = static_cast<int>(M.entries.rows());
  q.macaulay_columns = static_cast<int>(M.entries.cols());
}

int checked_delta(std::int64_t delta, const MacaulayMatrix& M) {
  if (delta < 1) throw Error(ErrorKind::kGenericity, "the expected root count is zero");
  if (delta > static_cast<std::int64_t>(M.rows.size())) {
    throw Error(ErrorKind::kGenericity, "expected root count " + std::to_string(delta) +
                                            " exceeds the number of Macaulay rows");
  }
  return static_cast<int>(delta);
}

std::vector<double> toric_shift(int n, std::uint64_t seed, int attempt) {
  return default_shift(n, derive_seed(seed, 1 + 16 * attempt));
}

template <class BuildMatrix>
QuotientRep run(const PolynomialSystem& system, const BuildOptions& options, BuildMatrix&& build_matrix) {
  system.require_square();
  const auto t0 = Clock::now();
  const MacaulayMatrix M = build_matrix();
  const double t_M = seconds_since(t0);
  const int delta = checked_delta(expected_root_count(system), M);
  const auto t1 = Clock::now();
  const NullSpaceMap ns = null_space(M, delta, options.tol);
  const double t_N = seconds_since(t1);
  const auto t2 = Clock::now();
  QuotientRep q = quotient_from_null_space(system, M, ns.N, options);
  q.timings = {t_M, t_N, seconds_since(t2)};
  record_null_space(q, ns, M);
  return q;
}

}  // namespace

NullSpaceMap null_space(const Eigen::MatrixXcd& M, int delta, const Tolerances& tol) {
  const long m = M.rows();
  if (delta < 1 || delta > m) {
    throw Error(ErrorKind::kInvalidArgument, "null space dimension " + std::to_string(delta) +
                                                 " out of range for " + std::to_string(m) + " rows");
  }
  NullSpaceMap ns;
  ns.delta = delta;
  const double inf = std::numeric_limits<double>::infinity();
  const long r = m - delta;
  double scale = 0.0;
  if (m <= kSvdRowLimit) {
    const auto svd = lapack::left_svd(M);
    ns.singular_values = Eigen::VectorXd::Zero(m);
    ns.singular_values.head(svd.s.size()) = svd.s;
    ns.N = svd.U.rightCols(delta).adjoint();
    const auto& s = ns.singular_values;
    if (r < 1) {
      ns.gap = inf;
    } else {
      ns.gap = s(r) > 0 ? s(r - 1) / s(r) : inf;
    }
    scale = s.size() > 0 ? s(0) : 0.0;
  } else {
    // The full U no longer fits comfortably; the complement of the
    // leading m - delta pivoted QR directions spans the same space.
    const auto qr = lapack::pivoted_qr_complement(M, delta);
    ns.N = qr.Q.adjoint();
    ns.singular_values = Eigen::VectorXd::Zero(m);
    ns.singular_values.head(qr.rdiag.size()) = qr.rdiag;
    const auto& s = ns.singular_values;
    if (r < 1) {
      ns.gap = inf;
    } else {
      ns.gap = s(r) > 0 ? s(r - 1) / s(r) : inf;
    }
    scale = spectral_norm(M);
  }
  ns.residual = scale > 0 ? spectral_norm(ns.N * M) / scale : 0.0;

  if (ns.gap < tol.gap_min) {
    throw Error(ErrorKind::kGenericity, "singular value gap " + format(ns.gap) + " at delta = " +
                                            std::to_string(delta) + " is below " + format(tol.gap_min) +
                                            "; the system is not generic");
  }
  if (ns.residual > tol.null) {
    throw Error(ErrorKind::kGenericity, "null space residual " + format(ns.residual) + " exceeds " +
                                            format(tol.null));
  }
  return ns;
}

NullSpaceMap null_space(const MacaulayMatrix& M, int delta, const Tolerances& tol) {
  return null_space(M.entries, delta, tol);
}

std::vector<Exponents> w_monomials(const MacaulayMatrix& M, const VariableBlocks& blocks) {
  std::vector<Exponents> out;
  switch (M.mode) {
    case Mode::kAffine:
      for (const auto& e : M.rows.monomials()) {
        if (degree(e) < M.degree.at(0)) out.push_back(e);
      }
      break;
    case Mode::kToric:
      for (const auto& e : M.rows.monomials()) {
        bool inside = true;
        for (std::size_t i = 0; i < e.size() && inside; ++i) inside = M.rows.contains(plus_unit(e, static_cast<int>(i)));
        if (inside) out.push_back(e);
      }
      break;
    case Mode::kProjective:
      out = monomials_of_degree(blocks.varcount(), M.degree.at(0) - 1);
      break;
    case Mode::kMultihom: {
      std::vector<int> d = M.degree;
      for (int& x : d) --x;
      out = monomials_of_multidegree(blocks, d);
      break;
    }
  }
  if (out.empty()) throw Error(ErrorKind::kEmptyW, "the space W is empty");
  return out;
}

Eigen::MatrixXcd restrict_to(const Eigen::MatrixXcd& N, const MonomialIndex& rows,
                             const std::vector<Exponents>& monomials) {
  if (monomials.empty()) throw Error(ErrorKind::kEmptyW, "no columns selected");
  std::vector<long> cols;
  cols.reserve(monomials.size());
  for (const auto& e : monomials) cols.push_back(static_cast<long>(rows.at(e)));
  return N(Eigen::all, cols);
}

BasisChoice select_basis(const Eigen::MatrixXcd& NW, const std::vector<Exponents>& candidates, int delta) {
  if (NW.cols() < delta) {
    throw Error(ErrorKind::kSurjectivity, "N_W has " + std::to_string(NW.cols()) + " columns, fewer than delta = " +
                                              std::to_string(delta));
  }
  if (NW.rows() < delta) {
    throw Error(ErrorKind::kSurjectivity, "N_W has fewer than delta = " + std::to_string(delta) + " rows");
  }
  const auto qr = lapack::pivoted_qr(NW);
  const double r0 = qr.rdiag(0);
  const double rd = qr.rdiag(delta - 1);
  if (!(r0 > 0) || rd <= kRankRatio * r0) {
    throw Error(ErrorKind::kSurjectivity, "N_W has numerical rank below delta = " + std::to_string(delta));
  }
  std::vector<int> cols(qr.pivots.begin(), qr.pivots.begin() + delta);
  std::sort(cols.begin(), cols.end());
  BasisChoice choice;
  choice.columns = cols;
  for (int c : cols) choice.monomials.push_back(candidates[c]);
  choice.nstar = NW(Eigen::all, cols);
  choice.cond = condition_number(choice.nstar);
  return choice;
}

BasisChoice forced_basis(const Eigen::MatrixXcd& NW, const std::vector<Exponents>& candidates,
                         const std::vector<Exponents>& basis) {
  if (static_cast<long>(basis.size()) != NW.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "forced basis size differs from delta");
  }
  BasisChoice choice;
  for (const auto& b : basis) {
    auto it = std::find(candidates.begin(), candidates.end(), b);
    if (it == candidates.end()) throw Error(ErrorKind::kInvalidArgument, "forced basis monomial is not in W");
    choice.columns.push_back(static_cast<int>(it - candidates.begin()));
  }
  choice.monomials = basis;
  choice.nstar = NW(Eigen::all, choice.columns);
  choice.cond = condition_number(choice.nstar);
  if (!std::isfinite(choice.cond)) throw Error(ErrorKind::kSurjectivity, "forced basis gives a singular N*");
  return choice;
}

std::int64_t expected_root_count(const PolynomialSystem& system) {
  system.require_square();
  switch (system.mode()) {
    case Mode::kAffine:
    case Mode::kProjective: {
      std::int64_t d = 1;
      for (int di : system.degrees()) d *= di;
      return d;
    }
    case Mode::kToric: return bkk_bound(system);
    case Mode::kMultihom: {
      const auto md = system.multidegrees();
      return multihom_bezout(md, system.blocks().sizes);
    }
  }
  return 0;
}

QuotientRep quotient_from_null_space(const PolynomialSystem& system, const MacaulayMatrix& M,
                                     const Eigen::MatrixXcd& N, const BuildOptions& options) {
  if (N.cols() != static_cast<long>(M.rows.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "null space columns differ from Macaulay rows");
  }
  switch (M.mode) {
    case Mode::kAffine:
    case Mode::kToric: return affine_stage(system, M, N, options);
    case Mode::kProjective: return projective_stage(system, M, N, options);
    case Mode::kMultihom: return multihom_stage(system, M, N, options);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown mode");
}

QuotientRep build_affine(const PolynomialSystem& system, const BuildOptions& options) {
  const PolynomialSystem affine = system.mode() == Mode::kAffine ? system : system.with_mode(Mode::kAffine);
  return run(affine, options, [&] { return dense_macaulay(affine); });
}

QuotientRep build_toric(const PolynomialSystem& system, const BuildOptions& options) {
  const PolynomialSystem toric = system.mode() == Mode::kToric ? system : system.with_mode(Mode::kToric);
  const int attempts = options.shift ? 1 : std::max(1, options.retries);
  for (int attempt = 0;; ++attempt) {
    const std::vector<double> shift = options.shift ? *options.shift : toric_shift(system.varcount(), options.seed, attempt);
    try {
      return run(toric, options, [&] { return toric_macaulay(toric, shift); });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateShift || attempt + 1 >= attempts) throw;
    }
  }
}

QuotientRep build_projective(const PolynomialSystem& system, const BuildOptions& options) {
  return run(system, options, [&] { return homogeneous_macaulay(system, options.degree); });
}

QuotientRep build_multihom(const PolynomialSystem& system, const BuildOptions& options) {
  const int nvars = system.varcount();
  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Identity(nvars, nvars);
  if (options.precondition) {
    const auto& blocks = system.blocks();
    for (int b = 0; b < blocks.block_count(); ++b) {
      const int w = blocks.width(b);
      Q.block(blocks.begin(b), blocks.begin(b), w, w) = random_unitary(w, derive_seed(options.seed, 2 + 16 * b));
    }
  }
  const PolynomialSystem transformed = options.precondition ? coordinate_change(system, Q) : system;
  QuotientRep q = run(transformed, options, [&] { return multihom_macaulay(transformed, options.degree_surplus); });
  q.back_transform = Q;
  return q;
}

MacaulayMatrix macaulay_matrix(const PolynomialSystem& system, const BuildOptions& options) {
  switch (system.mode()) {
    case Mode::kAffine: return dense_macaulay(system);
    case Mode::kToric:
      return toric_macaulay(system, options.shift ? *options.shift : toric_shift(system.varcount(), options.seed, 0));
    case Mode::kProjective: return homogeneous_macaulay(system, options.degree);
    case Mode::kMultihom: return multihom_macaulay(system, options.degree_surplus);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown mode");
}

QuotientRep build(const PolynomialSystem& system, const BuildOptions& options) {
  switch (system.mode()) {
    case Mode::kAffine: return build_affine(system, options);
    case Mode::kToric: return build_toric(system, options);
    case Mode::kProjective: return build_projective(system, options);
    case Mode::kMultihom: return build_multihom(system, options);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown mode");
}

double spectral_norm(const Eigen::MatrixXcd& A) {
  if (A.size() == 0) return 0.0;
  if (std::min(A.rows(), A.cols()) <= 200) {
    const Eigen::VectorXd s = lapack::singular_values(A);
    return s(0);
  }
  // Power iteration on A^H A.
  Eigen::VectorXcd v = random_unit_complex(A.cols(), 0x5eed);
  v.normalize();
  double estimate = 0.0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd w = A.adjoint() * (A * v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    const double next = std::sqrt(norm);
    v = w / norm;
    if (std::abs(next - estimate) <= 1e-6 * next) return next;
    estimate = next;
  }
  return estimate;
}

double commutator_norm(const std::vector<Eigen::MatrixXcd>& mats) {
  std::vector<double> norms;
  for (const auto& m : mats) norms.push_back(spectral_norm(m));
  double worst = 0.0;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      const double scale = std::max(norms[i], norms[j]);
      if (scale == 0.0) continue;
      const Eigen::MatrixXcd c = mats[i] * mats[j] - mats[j] * mats[i];
      worst = std::max(worst, spectral_norm(c) / scale);
    }
  }
  return worst;
}

RegularityReport regularity_check(const Eigen::MatrixXcd& N, const MonomialIndex& rows, int nvars, int d,
                                  std::uint64_t seed) {
  RegularityReport report;
  report.delta = static_cast<int>(N.rows());
  report.nullity = report.delta;
  if (d < 1) return report;
  const auto B = monomials_of_degree(nvars, d - 1);
  const auto h = random_unit_complex(nvars, derive_seed(seed, 100));
  Eigen::MatrixXcd nh = Eigen::MatrixXcd::Zero(N.rows(), static_cast<long>(B.size()));
  for (int i = 0; i < nvars; ++i) {
    std::vector<Exponents> moved;
    for (const auto& b : B) moved.push_back(plus_unit(b, i));
    nh += h(i) * restrict_to(N, rows, moved);
  }
  const Eigen::VectorXd s = lapack::singular_values(nh);
  if (s.size() == 0 || s(0) == 0.0) return report;
  int rank = 0;
  for (long i = 0; i < s.size(); ++i) {
    if (s(i) > 1e-10 * s(0)) ++rank;
  }
  report.rank = rank;
  report.sigma_ratio = s.size() >= report.delta ? s(report.delta - 1) / s(0) : 0.0;
  report.regular = rank >= report.delta;
  return report;
}

RegularityReport regularity_check(const PolynomialSystem& system, int d, std::uint64_t seed) {
  std::int64_t delta = 1;
  for (int di : system.degrees()) delta *= di;
  const MacaulayMatrix M = homogeneous_macaulay(system, d);
  const auto svd = lapack::left_svd(M.entries);
  const long m = M.entries.rows();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(m);
  s.head(svd.s.size()) = svd.s;
  const double smax = s.size() > 0 ? s(0) : 0.0;
  int nullity = 0;
  for (long i = 0; i < m; ++i) {
    if (s(i) <= 1e-10 * smax) ++nullity;
  }
  RegularityReport report;
  report.delta = static_cast<int>(delta);
  report.nullity = nullity;
  if (nullity == 0) return report;
  const Eigen::MatrixXcd N = svd.U.rightCols(nullity).adjoint();
  RegularityReport inner = regularity_check(N, M.rows, system.varcount(), d, seed);
  report.rank = inner.rank;
  report.sigma_ratio = inner.sigma_ratio;
  report.regular = nullity == delta && inner.rank == delta;
  return report;
}

}  // namespace mroot

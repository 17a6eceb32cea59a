#include "mroot/macaulay.hpp"

#include <algorithm>
#include <sstream>

#include "mroot/error.hpp"
#include "mroot/polytope.hpp"

namespace mroot {

MonomialIndex::MonomialIndex(std::vector<Exponents> monomials) : monomials_(std::move(monomials)) {
  lookup_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (!lookup_.emplace(monomials_[i], i).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate monomial in index");
    }
  }
}

long MonomialIndex::find(const Exponents& e) const {
  auto it = lookup_.find(e);
  return it == lookup_.end() ? -1 : static_cast<long>(it->second);
}

std::size_t MonomialIndex::at(const Exponents& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) throw Error(ErrorKind::kInvalidArgument, "monomial not in index");
  return it->second;
}

namespace {

void append_degree(int nvars, int var, int remaining, Exponents& current, std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    append_degree(nvars, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

Eigen::MatrixXcd fill(const std::vector<Polynomial>& polys, const MonomialIndex& rows,
                      const std::vector<ColumnLabel>& columns) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<long>(rows.size()), static_cast<long>(columns.size()));
  Exponents e;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& label = columns[c];
    for (const auto& t : polys[label.generator].terms()) {
      e = t.exponents;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += label.multiplier[k];
      const long r = rows.find(e);
      if (r < 0) throw Error(ErrorKind::kConsistency, "Macaulay column has a term outside the row space");
      m(r, static_cast<long>(c)) = t.coefficient;
    }
  }
  return m;
}

void require_affine_layout(const PolynomialSystem& system, const char* builder) {
  if (system.blocks().homogeneous) {
    throw Error(ErrorKind::kInvalidArgument, std::string(builder) + " needs an affine system");
  }
  system.require_square();
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int nvars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents current(nvars, 0);
  append_degree(nvars, 0, d, current, out);
  return out;
}

std::vector<Exponents> monomials_up_to_degree(int nvars, int d) {
  std::vector<Exponents> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Exponents> monomials_of_multidegree(const VariableBlocks& blocks, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != blocks.block_count()) {
    throw Error(ErrorKind::kDimensionMismatch, "multidegree length differs from block count");
  }
  std::vector<Exponents> out{Exponents{}};
  for (int b = 0; b < blocks.block_count(); ++b) {
    const auto part = monomials_of_degree(blocks.width(b), degrees[b]);
    std::vector<Exponents> next;
    next.reserve(out.size() * part.size());
    for (const auto& prefix : out) {
      for (const auto& m : part) {
        Exponents e = prefix;
        e.insert(e.end(), m.begin(), m.end());
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& variables) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << (i < variables.size() ? variables[i] : "x" + std::to_string(i + 1));
    if (e[i] != 1) os << '^' << e[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string column_label(const ColumnLabel& label, const std::vector<std::string>& variables) {
  return "(" + std::to_string(label.generator + 1) + ", " + monomial_string(label.multiplier, variables) + ")";
}

MacaulayMatrix dense_macaulay(const PolynomialSystem& system) {
  require_affine_layout(system, "dense Macaulay construction");
  const int n = system.varcount();
  const auto d = system.degrees();
  int rho = 1 - n;
  for (int di : d) rho += di;

  MacaulayMatrix M;
  M.mode = Mode::kAffine;
  M.degree = {rho};
  M.rows = MonomialIndex(monomials_up_to_degree(n, rho));
  for (int i = 0; i < n; ++i) {
    for (auto& beta : monomials_up_to_degree(n, rho - d[i])) M.columns.push_back({i, std::move(beta)});
  }
  M.entries = fill(system.polys(), M.rows, M.columns);
  return M;
}

MacaulayMatrix toric_macaulay(const PolynomialSystem& system, const std::vector<double>& shift) {
  require_affine_layout(system, "toric Macaulay construction");
  const int n = system.varcount();
  if (static_cast<int>(shift.size()) != n) throw Error(ErrorKind::kDimensionMismatch, "shift dimension mismatch");

  MacaulayMatrix M;
  M.mode = Mode::kToric;
  M.shift = shift;
  std::vector<Polynomial> polys;
  std::vector<LatticePolytope> polytopes;
  for (const auto& p : system.polys()) {
    auto [q, s] = shift_to_nonnegative(p);
    polytopes.push_back(newton_polytope(q));
    polys.push_back(std::move(q));
    M.laurent_shifts.push_back(std::move(s));
  }

  auto points = [&](int skip) {
    LatticePolytope sum = LatticePolytope::simplex(n);
    for (int j = 0; j < n; ++j) {
      if (j != skip) sum = minkowski_sum(sum, polytopes[j]);
    }
    auto pts = lattice_points(sum, shift);
    std::sort(pts.begin(), pts.end(), GradedLess{});
    return pts;
  };

  auto rows = points(-1);
  if (rows.empty()) throw Error(ErrorKind::kDegenerateShift, "shift leaves no lattice points; retry with a new shift");
  M.rows = MonomialIndex(std::move(rows));
  for (int i = 0; i < n; ++i) {
    auto multipliers = points(i);
    if (multipliers.empty()) {
      throw Error(ErrorKind::kDegenerateShift, "shift leaves no multipliers for generator " + std::to_string(i + 1) +
                                                   "; retry with a new shift");
    }
    for (auto& beta : multipliers) M.columns.push_back({i, std::move(beta)});
  }
  M.entries = fill(polys, M.rows, M.columns);
  return M;
}

MacaulayMatrix homogeneous_macaulay(const PolynomialSystem& system, std::optional<int> degree) {
  if (system.mode() != Mode::kProjective) {
    throw Error(ErrorKind::kInvalidArgument, "homogeneous Macaulay construction needs a projective system");
  }
  system.require_square();
  const int nvars = system.varcount();
  const auto d = system.degrees();
  int rho = 1 - static_cast<int>(d.size());
  for (int di : d) rho += di;
  if (degree) rho = *degree;

  MacaulayMatrix M;
  M.mode = Mode::kProjective;
  M.degree = {rho};
  M.rows = MonomialIndex(monomials_of_degree(nvars, rho));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (auto& beta : monomials_of_degree(nvars, rho - d[i])) {
      M.columns.push_back({static_cast<int>(i), std::move(beta)});
    }
  }
  M.entries = fill(system.polys(), M.rows, M.columns);
  return M;
}

MacaulayMatrix multihom_macaulay(const PolynomialSystem& system, int surplus) {
  if (system.mode() != Mode::kMultihom) {
    throw Error(ErrorKind::kInvalidArgument, "multihomogeneous Macaulay construction needs a multihom system");
  }
  if (surplus < 0) throw Error(ErrorKind::kInvalidArgument, "degree surplus must be nonnegative");
  system.require_square();
  const auto& blocks = system.blocks();
  const int k = blocks.block_count();
  const auto d = system.multidegrees();
  std::vector<int> rho(k, surplus);
  for (const auto& di : d) {
    for (int b = 0; b < k; ++b) rho[b] += di[b];
  }

  MacaulayMatrix M;
  M.mode = Mode::kMultihom;
  M.degree = rho;
  M.rows = MonomialIndex(monomials_of_multidegree(blocks, rho));
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<int> rest(k);
    for (int b = 0; b < k; ++b) rest[b] = rho[b] - d[i][b];
    for (auto& beta : monomials_of_multidegree(blocks, rest)) {
      M.columns.push_back({static_cast<int>(i), std::move(beta)});
    }
  }
  M.entries = fill(system.polys(), M.rows, M.columns);
  return M;
}

}  // namespace mroot

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "mroot/poly.hpp"
#include "mroot/system.hpp"

namespace mroot {

// Ordered list of monomials with reverse lookup.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Exponents> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponents>& monomials() const { return monomials_; }

  // Position of e, or -1.
  long find(const Exponents& e) const;
  // Position of e; throws kInvalidArgument if absent.
  std::size_t at(const Exponents& e) const;
  bool contains(const Exponents& e) const { return find(e) >= 0; }

 private:
  std::vector<Exponents> monomials_;
  std::unordered_map<Exponents, std::size_t, ExponentsHash> lookup_;
};

// Column (i, beta): the coefficient vector of x^beta * f_i.
struct ColumnLabel {
  int generator = 0;
  Exponents multiplier;
};

// Rows are monomials of V, columns are polynomial multiples.
struct MacaulayMatrix {
  Eigen::MatrixXcd entries;
  MonomialIndex rows;
  std::vector<ColumnLabel> columns;
  Mode mode = Mode::kAffine;
  // rho: one entry for dense/projective, one per block for multihom,
  // empty for toric.
  std::vector<int> degree;
  // Toric lattice shift v.
  std::vector<double> shift;
  // Monomial each generator was multiplied by to clear negative exponents
  // (toric mode only).
  std::vector<Exponents> laurent_shifts;
};

// All monomials in nvars variables of exact degree d, in graded order.
std::vector<Exponents> monomials_of_degree(int nvars, int d);
// All monomials of degree <= d, in graded order.
std::vector<Exponents> monomials_up_to_degree(int nvars, int d);
// Monomials in homogeneous block coordinates with per-block degree
// degrees[b], in graded order.
std::vector<Exponents> monomials_of_multidegree(const VariableBlocks& blocks, const std::vector<int>& degrees);

// Label such as "(1, x1^2*x2)"; generators are numbered from 1.
std::string column_label(const ColumnLabel& label, const std::vector<std::string>& variables);
std::string monomial_string(const Exponents& e, const std::vector<std::string>& variables);

// rho = sum d_i - n + 1; rows are the monomials of degree <= rho.
MacaulayMatrix dense_macaulay(const PolynomialSystem& system);

// Rows are the lattice points of (simplex + P_1 + ... + P_n + v); the
// multipliers of f_i are the lattice points of the same sum without P_i.
MacaulayMatrix toric_macaulay(const PolynomialSystem& system, const std::vector<double>& shift);

// rho = sum d_i - n + 1 unless a degree is given. Rows are the monomials
// of exact degree rho in x0..xn.
MacaulayMatrix homogeneous_macaulay(const PolynomialSystem& system, std::optional<int> degree = std::nullopt);

// rho = d_1 + ... + d_n (per block) plus `surplus` in every block.
MacaulayMatrix multihom_macaulay(const PolynomialSystem& system, int surplus = 0);

}  // namespace mroot

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace mroot {

using Complex = std::complex<double>;

// Exponent vector of a monomial. Entries may be negative for Laurent
// monomials; everything downstream of the toric shift is nonnegative.
using Exponents = std::vector<int>;

int degree(const Exponents& e);

// The fixed graded order used for every matrix index and for printing:
// lower total degree first, then a larger exponent on an earlier variable
// first. In two variables: 1, x1, x2, x1^2, x1*x2, x2^2, x1^3, ...
bool graded_less(const Exponents& a, const Exponents& b);

struct GradedLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return graded_less(a, b); }
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

struct Term {
  Complex coefficient;
  Exponents exponents;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  // Duplicated exponents are merged and exact zeros dropped.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);
  static Polynomial constant(int nvars, Complex c);
  static Polynomial monomial(Exponents e, Complex c = 1.0);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_laurent() const;

  Complex coefficient(const Exponents& e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Negative powers are allowed for a single term only.
  Polynomial pow(int k) const;

  // Multiplies by x^shift (shift may be negative).
  Polynomial shifted(const Exponents& shift) const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;  // sorted by graded_less, nonzero coefficients
};

// Block structure of the variables. In homogeneous form block i owns
// sizes[i] + 1 consecutive variables x_{i0}..x_{in_i}; in affine form it
// owns sizes[i] variables.
struct VariableBlocks {
  std::vector<int> sizes;
  bool homogeneous = false;

  int block_count() const { return static_cast<int>(sizes.size()); }
  int width(int block) const { return sizes[block] + (homogeneous ? 1 : 0); }
  int begin(int block) const;
  int varcount() const;
  int affine_dimension() const;

  friend bool operator==(const VariableBlocks&, const VariableBlocks&) = default;
};

Complex evaluate(const Polynomial& p, std::span<const Complex> z);

// Throws kZeroPolynomial for p = 0.
int total_degree(const Polynomial& p);
std::vector<int> multidegree(const Polynomial& p, const VariableBlocks& blocks);

bool is_homogeneous(const Polynomial& p);
bool is_multihomogeneous(const Polynomial& p, const VariableBlocks& blocks);

// Sum of coefficient moduli.
double norm1(const Polynomial& p);

// h^d * p(x1/h, ..., xn/h) for p in n variables and a linear form h in
// x0..xn with nonzero x0 coefficient.
Polynomial homogenize(const Polynomial& p, int d, const Polynomial& h);

// p((1 - sum_i h_i y_i) / h_0, y_1, ..., y_n) for homogeneous p in x0..xn.
Polynomial dehomogenize(const Polynomial& p, const Polynomial& h);

// Blockwise versions. p lives in the affine variables of `affine` (block
// sizes n_i), forms[i] is a linear form in the n_i + 1 coordinates of
// block i, and the result lives in the homogeneous coordinates.
Polynomial multihom_homogenize(const Polynomial& p, std::span<const int> degrees,
                               std::span<const Polynomial> forms,
                               const VariableBlocks& affine);
Polynomial multihom_dehomogenize(const Polynomial& p, std::span<const Polynomial> forms,
                                 const VariableBlocks& homogeneous);

// p(T x): variable x_i is replaced by sum_j T(i, j) x_j.
Polynomial substitute_linear(const Polynomial& p, const Eigen::MatrixXcd& transform);

// Linear form (no constant term) with coefficients uniform on the unit
// circle, deterministic in the seed.
Polynomial random_linear_form(int nvars, std::uint64_t seed);

// Exponents of the stored terms, in term order.
std::vector<Exponents> support(const Polynomial& p);

// Multiplies by the smallest monomial that makes every exponent
// nonnegative. Returns the shifted polynomial and the applied shift.
std::pair<Polynomial, Exponents> shift_to_nonnegative(const Polynomial& p);

}  // namespace mroot

#include "mroot/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "mroot/error.hpp"

namespace mroot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kZeroPolynomial: return "zero-polynomial";
    case ErrorKind::kDegree: return "degree";
    case ErrorKind::kNotHomogeneous: return "not-homogeneous";
    case ErrorKind::kSingularTransform: return "singular-transform";
    case ErrorKind::kNonSquare: return "non-square";
    case ErrorKind::kDegenerateShift: return "degenerate-shift";
    case ErrorKind::kEmptyW: return "empty-w";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kGenericity: return "genericity";
    case ErrorKind::kSurjectivity: return "surjectivity";
    case ErrorKind::kRegularity: return "regularity";
    case ErrorKind::kCommutator: return "commutator";
    case ErrorKind::kSchur: return "schur";
    case ErrorKind::kDegeneratePencil: return "degenerate-pencil";
    case ErrorKind::kConsistency: return "consistency";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return 2;
    case ErrorKind::kGenericity: return 3;
    case ErrorKind::kSurjectivity:
    case ErrorKind::kRegularity: return 4;
    case ErrorKind::kResource: return 5;
    default: return 1;
  }
}

int degree(const Exponents& e) {
  int d = 0;
  for (int a : e) d += a;
  return d;
}

bool graded_less(const Exponents& a, const Exponents& b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  // Same degree: the larger exponent on the earliest differing variable
  // comes first.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() < b.size();
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int a : e) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(a));
    h *= 0x100000001b3ULL;
  }
  return h;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  std::map<Exponents, Complex, GradedLess> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != nvars) {
      throw Error(ErrorKind::kDimensionMismatch, "term has " + std::to_string(t.exponents.size()) +
                                                     " exponents, expected " + std::to_string(nvars));
    }
    acc[std::move(t.exponents)] += t.coefficient;
  }
  Polynomial p(nvars);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != Complex(0.0)) p.terms_.push_back({c, e});
  }
  return p;
}

Polynomial Polynomial::constant(int nvars, Complex c) {
  return from_terms(nvars, {{c, Exponents(nvars, 0)}});
}

Polynomial Polynomial::monomial(Exponents e, Complex c) {
  const int n = static_cast<int>(e.size());
  return from_terms(n, {{c, std::move(e)}});
}

Polynomial Polynomial::variable(int nvars, int index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

bool Polynomial::is_laurent() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::any_of(t.exponents.begin(), t.exponents.end(), [](int a) { return a < 0; });
  });
}

Complex Polynomial::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return graded_less(t.exponents, x); });
  if (it != terms_.end() && it->exponents == e) return it->coefficient;
  return 0.0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero() && other.nvars_ == 0) return *this;
  if (other.nvars_ != nvars_) {
    if (is_zero() && nvars_ == 0) {
      nvars_ = other.nvars_;
    } else {
      throw Error(ErrorKind::kDimensionMismatch, "adding polynomials in different variable counts");
    }
  }
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = from_terms(nvars_, std::move(all));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) {
    throw Error(ErrorKind::kDimensionMismatch, "multiplying polynomials in different variable counts");
  }
  std::map<Exponents, Complex, GradedLess> acc;
  Exponents e(a.nvars_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = s.exponents[i] + t.exponents[i];
      acc[e] += s.coefficient * t.coefficient;
    }
  }
  Polynomial r(a.nvars_);
  for (auto& [ex, c] : acc) {
    if (c != Complex(0.0)) r.terms_.push_back({c, ex});
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) {
      throw Error(ErrorKind::kInvalidArgument, "negative power of a polynomial with more than one term");
    }
    Exponents e = terms_[0].exponents;
    for (int& a : e) a *= k;
    return from_terms(nvars_, {{std::pow(terms_[0].coefficient, k), std::move(e)}});
  }
  Polynomial result = constant(nvars_, 1.0);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Exponents& shift) const {
  if (static_cast<int>(shift.size()) != nvars_) {
    throw Error(ErrorKind::kDimensionMismatch, "shift length differs from variable count");
  }
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    for (int i = 0; i < nvars_; ++i) t.exponents[i] += shift[i];
  }
  // Adding a fixed vector preserves the graded order.
  return r;
}

int VariableBlocks::begin(int block) const {
  int b = 0;
  for (int i = 0; i < block; ++i) b += width(i);
  return b;
}

int VariableBlocks::varcount() const { return begin(block_count()); }

int VariableBlocks::affine_dimension() const {
  int n = 0;
  for (int s : sizes) n += s;
  return n;
}

namespace {

// Pairwise summation keeps the rounding error growth logarithmic in the
// number of terms.
Complex pairwise_sum(std::span<const Complex> v) {
  if (v.size() <= 4) {
    Complex s = 0.0;
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

Complex integer_power(Complex base, int k) {
  if (k >= 0) {
    Complex r = 1.0;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }
  return 1.0 / integer_power(base, -k);
}

}  // namespace

Complex evaluate(const Polynomial& p, std::span<const Complex> z) {
  if (static_cast<int>(z.size()) != p.nvars()) {
    throw Error(ErrorKind::kDimensionMismatch, "evaluation point has " + std::to_string(z.size()) +
                                                   " coordinates, polynomial has " +
                                                   std::to_string(p.nvars()) + " variables");
  }
  std::vector<Complex> values;
  values.reserve(p.size());
  for (const auto& t : p.terms()) {
    Complex v = t.coefficient;
    for (int i = 0; i < p.nvars(); ++i) {
      const int a = t.exponents[i];
      if (a == 0) continue;
      if (a < 0 && z[i] == Complex(0.0)) {
        throw Error(ErrorKind::kInvalidArgument, "zero base with negative exponent");
      }
      v *= integer_power(z[i], a);
    }
    values.push_back(v);
  }
  return pairwise_sum(values);
}

int total_degree(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "degree of the zero polynomial is undefined");
  int d = degree(p.terms().front().exponents);
  for (const auto& t : p.terms()) d = std::max(d, degree(t.exponents));
  return d;
}

std::vector<int> multidegree(const Polynomial& p, const VariableBlocks& blocks) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "degree of the zero polynomial is undefined");
  if (blocks.varcount() != p.nvars()) {
    throw Error(ErrorKind::kDimensionMismatch, "block structure does not match variable count");
  }
  std::vector<int> result(blocks.block_count(), std::numeric_limits<int>::min());
  for (const auto& t : p.terms()) {
    for (int b = 0; b < blocks.block_count(); ++b) {
      int s = 0;
      for (int j = 0; j < blocks.width(b); ++j) s += t.exponents[blocks.begin(b) + j];
      result[b] = std::max(result[b], s);
    }
  }
  return result;
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const int d = degree(p.terms().front().exponents);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [d](const Term& t) { return degree(t.exponents) == d; });
}

bool is_multihomogeneous(const Polynomial& p, const VariableBlocks& blocks) {
  if (p.is_zero()) return true;
  if (blocks.varcount() != p.nvars()) return false;
  auto block_degrees = [&](const Exponents& e) {
    std::vector<int> r(blocks.block_count(), 0);
    for (int b = 0; b < blocks.block_count(); ++b) {
      for (int j = 0; j < blocks.width(b); ++j) r[b] += e[blocks.begin(b) + j];
    }
    return r;
  };
  const auto first = block_degrees(p.terms().front().exponents);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const Term& t) { return block_degrees(t.exponents) == first; });
}

double norm1(const Polynomial& p) {
  double s = 0.0;
  for (const auto& t : p.terms()) s += std::abs(t.coefficient);
  return s;
}

namespace {

void require_linear_form(const Polynomial& h, int nvars, const char* what) {
  if (h.nvars() != nvars) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(what) + " has the wrong number of variables");
  }
  for (const auto& t : h.terms()) {
    if (degree(t.exponents) != 1) {
      throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must be a linear form");
    }
  }
}

// Coefficients h_0..h_{n} of a linear form.
std::vector<Complex> linear_coefficients(const Polynomial& h) {
  std::vector<Complex> c(h.nvars(), 0.0);
  for (const auto& t : h.terms()) {
    for (int i = 0; i < h.nvars(); ++i) {
      if (t.exponents[i] == 1) c[i] = t.coefficient;
    }
  }
  return c;
}

// Cache of powers of a fixed polynomial.
class PowerCache {
 public:
  explicit PowerCache(Polynomial base) : powers_{Polynomial::constant(base.nvars(), 1.0), base} {}

  const Polynomial& operator()(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
  }

 private:
  std::vector<Polynomial> powers_;
};

}  // namespace

Polynomial homogenize(const Polynomial& p, int d, const Polynomial& h) {
  const int n = p.nvars();
  require_linear_form(h, n + 1, "homogenizing form");
  if (linear_coefficients(h)[0] == Complex(0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "homogenizing form needs a nonzero x0 coefficient");
  }
  if (!p.is_zero() && total_degree(p) > d) {
    throw Error(ErrorKind::kDegree, "polynomial degree " + std::to_string(total_degree(p)) +
                                        " exceeds homogenization degree " + std::to_string(d));
  }
  PowerCache hp(h);
  Polynomial result(n + 1);
  for (const auto& t : p.terms()) {
    Exponents e(n + 1, 0);
    std::copy(t.exponents.begin(), t.exponents.end(), e.begin() + 1);
    result += Polynomial::monomial(e, t.coefficient) * hp(d - degree(t.exponents));
  }
  return result;
}

Polynomial dehomogenize(const Polynomial& p, const Polynomial& h) {
  const int n = p.nvars() - 1;
  if (n < 0) throw Error(ErrorKind::kDimensionMismatch, "dehomogenize needs at least one variable");
  require_linear_form(h, n + 1, "homogenizing form");
  if (!is_homogeneous(p)) throw Error(ErrorKind::kNotHomogeneous, "dehomogenize needs a homogeneous polynomial");
  const auto hc = linear_coefficients(h);
  if (hc[0] == Complex(0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "homogenizing form needs a nonzero x0 coefficient");
  }
  // x0 -> (1 - sum h_i y_i) / h_0
  std::vector<Term> x0_terms{{1.0 / hc[0], Exponents(n, 0)}};
  for (int i = 1; i <= n; ++i) {
    Exponents e(n, 0);
    e[i - 1] = 1;
    x0_terms.push_back({-hc[i] / hc[0], e});
  }
  PowerCache x0(Polynomial::from_terms(n, std::move(x0_terms)));
  Polynomial result(n);
  for (const auto& t : p.terms()) {
    Exponents rest(t.exponents.begin() + 1, t.exponents.end());
    result += Polynomial::monomial(rest, t.coefficient) * x0(t.exponents[0]);
  }
  return result;
}

Polynomial multihom_homogenize(const Polynomial& p, std::span<const int> degrees,
                               std::span<const Polynomial> forms, const VariableBlocks& affine) {
  if (affine.homogeneous) throw Error(ErrorKind::kInvalidArgument, "expected affine block structure");
  if (affine.varcount() != p.nvars()) {
    throw Error(ErrorKind::kDimensionMismatch, "block structure does not match variable count");
  }
  const int k = affine.block_count();
  if (static_cast<int>(degrees.size()) != k || static_cast<int>(forms.size()) != k) {
    throw Error(ErrorKind::kDimensionMismatch, "need one degree and one linear form per block");
  }
  VariableBlocks hom{affine.sizes, true};
  const int total = hom.varcount();
  std::vector<PowerCache> hp;
  for (int b = 0; b < k; ++b) {
    require_linear_form(forms[b], affine.sizes[b] + 1, "block form");
    if (linear_coefficients(forms[b])[0] == Complex(0.0)) {
      throw Error(ErrorKind::kInvalidArgument, "block form needs a nonzero x_{i0} coefficient");
    }
    // Embed the block form into all homogeneous coordinates.
    std::vector<Term> embedded;
    for (const auto& t : forms[b].terms()) {
      Exponents e(total, 0);
      std::copy(t.exponents.begin(), t.exponents.end(), e.begin() + hom.begin(b));
      embedded.push_back({t.coefficient, e});
    }
    hp.emplace_back(Polynomial::from_terms(total, std::move(embedded)));
  }
  Polynomial result(total);
  for (const auto& t : p.terms()) {
    Exponents e(total, 0);
    Polynomial factor = Polynomial::constant(total, t.coefficient);
    for (int b = 0; b < k; ++b) {
      int block_degree = 0;
      for (int j = 0; j < affine.sizes[b]; ++j) {
        const int a = t.exponents[affine.begin(b) + j];
        e[hom.begin(b) + 1 + j] = a;
        block_degree += a;
      }
      if (block_degree > degrees[b]) {
        throw Error(ErrorKind::kDegree, "block degree exceeds homogenization degree");
      }
      factor = factor * hp[b](degrees[b] - block_degree);
    }
    result += Polynomial::monomial(e) * factor;
  }
  return result;
}

Polynomial multihom_dehomogenize(const Polynomial& p, std::span<const Polynomial> forms,
                                 const VariableBlocks& homogeneous) {
  if (!homogeneous.homogeneous) throw Error(ErrorKind::kInvalidArgument, "expected homogeneous block structure");
  if (homogeneous.varcount() != p.nvars()) {
    throw Error(ErrorKind::kDimensionMismatch, "block structure does not match variable count");
  }
  if (!is_multihomogeneous(p, homogeneous)) {
    throw Error(ErrorKind::kNotHomogeneous, "polynomial is not multihomogeneous");
  }
  const int k = homogeneous.block_count();
  if (static_cast<int>(forms.size()) != k) throw Error(ErrorKind::kDimensionMismatch, "need one form per block");
  VariableBlocks affine{homogeneous.sizes, false};
  const int n = affine.varcount();
  std::vector<PowerCache> x0;
  for (int b = 0; b < k; ++b) {
    require_linear_form(forms[b], homogeneous.sizes[b] + 1, "block form");
    const auto hc = linear_coefficients(forms[b]);
    if (hc[0] == Complex(0.0)) throw Error(ErrorKind::kInvalidArgument, "block form needs a nonzero x_{i0} coefficient");
    std::vector<Term> terms{{1.0 / hc[0], Exponents(n, 0)}};
    for (int j = 1; j <= homogeneous.sizes[b]; ++j) {
      Exponents e(n, 0);
      e[affine.begin(b) + j - 1] = 1;
      terms.push_back({-hc[j] / hc[0], e});
    }
    x0.emplace_back(Polynomial::from_terms(n, std::move(terms)));
  }
  Polynomial result(n);
  for (const auto& t : p.terms()) {
    Exponents e(n, 0);
    Polynomial factor = Polynomial::constant(n, t.coefficient);
    for (int b = 0; b < k; ++b) {
      for (int j = 1; j <= homogeneous.sizes[b]; ++j) {
        e[affine.begin(b) + j - 1] = t.exponents[homogeneous.begin(b) + j];
      }
      factor = factor * x0[b](t.exponents[homogeneous.begin(b)]);
    }
    result += Polynomial::monomial(e) * factor;
  }
  return result;
}

Polynomial substitute_linear(const Polynomial& p, const Eigen::MatrixXcd& transform) {
  const int n = p.nvars();
  if (transform.rows() != n || transform.cols() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "transform must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (p.is_laurent()) throw Error(ErrorKind::kInvalidArgument, "linear substitution of a Laurent polynomial");
  std::vector<PowerCache> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      terms.push_back({transform(i, j), e});
    }
    images.emplace_back(Polynomial::from_terms(n, std::move(terms)));
  }
  Polynomial result(n);
  for (const auto& t : p.terms()) {
    Polynomial factor = Polynomial::constant(n, t.coefficient);
    for (int i = 0; i < n; ++i) {
      if (t.exponents[i] > 0) factor = factor * images[i](t.exponents[i]);
    }
    result += factor;
  }
  return result;
}

Polynomial random_linear_form(int nvars, std::uint64_t seed) {
  if (nvars < 1) throw Error(ErrorKind::kInvalidArgument, "linear form needs at least one variable");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Term> terms;
  for (int i = 0; i < nvars; ++i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    terms.push_back({std::polar(1.0, angle(rng)), e});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

std::vector<Exponents> support(const Polynomial& p) {
  std::vector<Exponents> s;
  s.reserve(p.size());
  for (const auto& t : p.terms()) s.push_back(t.exponents);
  return s;
}

std::pair<Polynomial, Exponents> shift_to_nonnegative(const Polynomial& p) {
  Exponents shift(p.nvars(), 0);
  for (const auto& t : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i) shift[i] = std::max(shift[i], -t.exponents[i]);
  }
  return {p.shifted(shift), shift};
}

}  // namespace mroot

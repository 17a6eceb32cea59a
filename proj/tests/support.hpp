#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mroot/macaulay.hpp"
#include "mroot/poly.hpp"
#include "mroot/roots.hpp"
#include "mroot/system.hpp"

#ifndef MROOT_TEST_DATA_DIR
#define MROOT_TEST_DATA_DIR "tests/data"
#endif

namespace mroot::testing {

inline std::string data_path(const std::string& name) { return std::string(MROOT_TEST_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

using Point = std::vector<Complex>;

inline double affine_distance(const Point& a, const Point& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// sin of the angle between the lines through a and b, blockwise maximum.
// Computed from the projection residual, which keeps full accuracy for
// nearby lines.
inline double projective_distance(const Point& a, const Point& b, const VariableBlocks& blocks) {
  double d = 0.0;
  for (int k = 0; k < blocks.block_count(); ++k) {
    const int s = blocks.begin(k);
    const int w = blocks.width(k);
    Complex inner = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (int i = s; i < s + w; ++i) {
      inner += std::conj(b[i]) * a[i];
      na += std::norm(a[i]);
      nb += std::norm(b[i]);
    }
    double r = 0.0;
    for (int i = s; i < s + w; ++i) r += std::norm(a[i] - inner / nb * b[i]);
    d = std::max(d, std::sqrt(r / na));
  }
  return d;
}

// Largest distance over the best one-to-one matching, found greedily by
// nearest neighbours; infinity when the counts differ.
template <class Distance>
double match_distance(const std::vector<Point>& computed, const std::vector<Point>& expected, Distance dist) {
  if (computed.size() != expected.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(expected.size(), false);
  double worst = 0.0;
  for (const auto& p : computed) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (used[j]) continue;
      const double d = dist(p, expected[j]);
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

inline std::vector<Point> coords(const RootSet& set) {
  std::vector<Point> out;
  for (const auto& r : set.roots) {
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.coords);
  }
  return out;
}

inline double root_set_distance(const RootSet& a, const RootSet& b) {
  if (a.mode == Mode::kProjective || a.mode == Mode::kMultihom) {
    const VariableBlocks blocks = a.blocks;
    return match_distance(coords(a), coords(b),
                          [&](const Point& p, const Point& q) { return projective_distance(p, q, blocks); });
  }
  return match_distance(coords(a), coords(b), affine_distance);
}

inline int total_multiplicity(const RootSet& set) {
  int n = 0;
  for (const auto& r : set.roots) n += r.multiplicity;
  return n;
}

inline double max_residual(const RootSet& set) {
  double r = 0.0;
  for (const auto& root : set.roots) r = std::max(r, root.residual);
  return r;
}

// Random polynomial supported on the given monomials with complex
// Gaussian coefficients.
inline Polynomial random_polynomial(int nvars, const std::vector<Exponents>& monomials, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Term> terms;
  for (const auto& e : monomials) {
    const double re = normal(rng);
    const double im = normal(rng);
    terms.push_back({Complex(re, im), e});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

inline std::vector<std::string> names(const std::string& stem, int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

// Homogeneous system in x0, x1, x2 of the given degrees whose forms all
// vanish at (0, 1, 1), a point at infinity.
inline PolynomialSystem projective_system_at_infinity(int d1, int d2, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> polys;
  const Point infinity{0.0, 1.0, 1.0};
  for (int d : {d1, d2}) {
    Polynomial f = random_polynomial(3, monomials_of_degree(3, d), rng);
    Exponents top{0, d, 0};
    f -= Polynomial::monomial(top, evaluate(f, infinity));
    polys.push_back(f);
  }
  return PolynomialSystem(std::move(polys), names("x", 3), Mode::kProjective);
}

// Random pair of bidegree (d, d) forms on P1 x P1.
inline PolynomialSystem bihomogeneous_system(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VariableBlocks blocks{{1, 1}, true};
  const auto support = monomials_of_multidegree(blocks, {d, d});
  std::vector<Polynomial> polys;
  for (int i = 0; i < 2; ++i) polys.push_back(random_polynomial(4, support, rng));
  return PolynomialSystem(std::move(polys), {"x10", "x11", "x20", "x21"}, Mode::kMultihom, blocks);
}

}  // namespace mroot::testing

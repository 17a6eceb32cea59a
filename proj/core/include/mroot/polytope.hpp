#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mroot/poly.hpp"
#include "mroot/system.hpp"

namespace mroot {

// Inequality a . x <= b with integer data, or an equality when used as
// an affine-hull constraint.
struct HalfSpace {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
};

// Convex hull of finitely many integer points. Stores the exact vertex
// set (lexicographically sorted) together with an exact H-description:
// equalities cutting out the affine hull and facet inequalities.
//
// Coordinates must stay below 2^20 in magnitude; determinants are taken
// in 128-bit integer arithmetic.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  // Throws kInvalidArgument for an empty point set.
  static LatticePolytope hull(std::vector<Exponents> points);
  static LatticePolytope simplex(int dim, int scale = 1);
  static LatticePolytope cube(int dim, int scale = 1);

  int ambient_dimension() const { return ambient_; }
  // Dimension of the affine hull.
  int dimension() const { return dim_; }
  const std::vector<Exponents>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<HalfSpace>& equalities() const { return equalities_; }

  // n! Vol_n, an exact integer (0 unless full-dimensional).
  std::int64_t normalized_volume() const { return normalized_volume_; }
  double volume() const;

  bool contains(std::span<const double> point, double tol = 1e-9) const;

  LatticePolytope scaled(int factor) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  int ambient_ = 0;
  int dim_ = -1;
  std::vector<Exponents> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equalities_;
  std::int64_t normalized_volume_ = 0;
};

// Throws kZeroPolynomial for p = 0.
LatticePolytope newton_polytope(const Polynomial& p);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(std::span<const LatticePolytope> polytopes, int ambient);

// Integer points of P + shift, lexicographically sorted. Facet and
// equality constraints are tested with an absolute tolerance of `tol`
// on the unit-normalized inequalities.
std::vector<Exponents> lattice_points(const LatticePolytope& p, std::span<const double> shift, double tol = 1e-9);

// Mixed volume normalized so that MV(simplex, ..., simplex) = 1, via
// inclusion-exclusion over subset sums. Cost grows like 2^n hull and
// volume computations, intended for n <= 5.
std::int64_t mixed_volume_inclusion_exclusion(std::span<const LatticePolytope> polytopes);

// The same coefficient extracted from Vol(sum lambda_i P_i) sampled on
// the integer grid lambda in {1,2}^n (mixed forward difference).
std::int64_t mixed_volume_interpolation(std::span<const LatticePolytope> polytopes);

// Runs both methods and throws kConsistency if they disagree.
std::int64_t mixed_volume(std::span<const LatticePolytope> polytopes);

// Mixed volume of the Newton polytopes of a square system (after the
// Laurent shift, which does not change the polytopes up to translation).
std::int64_t bkk_bound(const PolynomialSystem& system);

// Coefficient of zeta_1^{n_1} ... zeta_k^{n_k} in
// prod_i (d_{i1} zeta_1 + ... + d_{ik} zeta_k).
std::int64_t multihom_bezout(std::span<const std::vector<int>> degrees, std::span<const int> block_sizes);

// v = eps * u with u uniform in (-1, 0)^n from the seed.
std::vector<double> default_shift(int n, std::uint64_t seed, double eps = 1e-3);

}  // namespace mroot

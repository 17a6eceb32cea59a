#include "mroot/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mroot/error.hpp"

namespace mroot {

namespace {

using i64 = std::int64_t;
using i128 = __int128;
using IntVec = std::vector<i64>;

constexpr i64 kMaxCoordinate = i64{1} << 20;

i64 gcd_abs(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i64 checked_narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw Error(ErrorKind::kResource, "polytope arithmetic exceeds 64-bit range");
  }
  return static_cast<i64>(v);
}

i128 dot(const IntVec& a, const IntVec& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
  return s;
}

void normalize_by_gcd(IntVec& v) {
  i64 g = 0;
  for (i64 x : v) g = gcd_abs(g, x);
  if (g > 1) {
    for (i64& x : v) x /= g;
  }
}

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination.
i128 determinant(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i128 sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Row echelon data of the span of a set of integer vectors.
struct Echelon {
  std::vector<IntVec> rows;    // reduced rows, pivot entries positive
  std::vector<int> pivots;     // pivot column of each row

  // Reduces v against the stored rows; returns the remainder (zero iff v
  // lies in the span).
  IntVec reduce(IntVec v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int c = pivots[r];
      if (v[c] == 0) continue;
      const i64 p = rows[r][c];
      const i64 f = v[c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_narrow(static_cast<i128>(v[j]) * p - static_cast<i128>(f) * rows[r][j]);
      normalize_by_gcd(v);
    }
    return v;
  }

  bool insert(IntVec v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](i64 x) { return x != 0; });
    if (it == v.end()) return false;
    const int c = static_cast<int>(it - v.begin());
    if (*it < 0) {
      for (i64& x : v) x = -x;
    }
    normalize_by_gcd(v);
    // Keep rows fully reduced: eliminate the new pivot from earlier rows.
    for (auto& row : rows) {
      if (row[c] == 0) continue;
      const i64 f = row[c];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = checked_narrow(static_cast<i128>(row[j]) * v[c] - static_cast<i128>(f) * v[j]);
      normalize_by_gcd(row);
    }
    rows.push_back(std::move(v));
    pivots.push_back(c);
    return true;
  }

  // Integer basis of the orthogonal complement of the row span.
  std::vector<IntVec> complement(int n) const {
    std::vector<IntVec> result;
    for (int f = 0; f < n; ++f) {
      if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
      // x_f = L, x_{pivot_r} = -row_r[f] * L / row_r[pivot_r].
      i128 lcm = 1;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const i64 p = rows[r][pivots[r]];
        lcm = lcm / std::gcd(static_cast<i64>(lcm), p) * p;
      }
      IntVec x(n, 0);
      x[f] = checked_narrow(lcm);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        x[pivots[r]] = checked_narrow(-static_cast<i128>(rows[r][f]) * lcm / rows[r][pivots[r]]);
      }
      normalize_by_gcd(x);
      result.push_back(std::move(x));
    }
    return result;
  }
};

struct SimplexFacet {
  std::vector<int> verts;  // sorted point indices
  IntVec normal;
  i64 offset = 0;
};

// Outward normal of the hyperplane through k points in R^k.
IntVec hyperplane_normal(const std::vector<IntVec>& pts, const std::vector<int>& idx) {
  const std::size_t k = pts[0].size();
  std::vector<IntVec> diff;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    IntVec d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = pts[idx[j]][i] - pts[idx[0]][i];
    diff.push_back(std::move(d));
  }
  IntVec normal(k);
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::vector<i128>> minor;
    for (const auto& d : diff) {
      std::vector<i128> row;
      for (std::size_t i = 0; i < k; ++i) {
        if (i != col) row.push_back(d[i]);
      }
      minor.push_back(std::move(row));
    }
    const i128 det = determinant(std::move(minor));
    normal[col] = checked_narrow((col % 2 == 0) ? det : -det);
  }
  normalize_by_gcd(normal);
  return normal;
}

// Beneath-beyond convex hull in R^k of points whose affine hull is all of
// R^k (k >= 2). Returns a simplicial triangulation of the boundary.
std::vector<SimplexFacet> simplicial_hull(const std::vector<IntVec>& pts) {
  const std::size_t k = pts[0].size();
  std::vector<int> start{0};
  Echelon ech;
  for (std::size_t i = 1; i < pts.size() && start.size() < k + 1; ++i) {
    IntVec d(k);
    for (std::size_t c = 0; c < k; ++c) d[c] = pts[i][c] - pts[0][c];
    if (ech.insert(d)) start.push_back(static_cast<int>(i));
  }
  // Interior reference point, scaled by k + 1 to stay integral.
  IntVec centre(k, 0);
  for (int v : start) {
    for (std::size_t c = 0; c < k; ++c) centre[c] += pts[v][c];
  }
  const i64 scale = static_cast<i64>(k + 1);

  auto make_facet = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    SimplexFacet f;
    f.normal = hyperplane_normal(pts, verts);
    f.offset = checked_narrow(dot(f.normal, pts[verts[0]]));
    if (dot(f.normal, centre) > static_cast<i128>(f.offset) * scale) {
      for (i64& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    f.verts = std::move(verts);
    return f;
  };

  std::vector<SimplexFacet> facets;
  for (std::size_t skip = 0; skip < start.size(); ++skip) {
    std::vector<int> verts;
    for (std::size_t j = 0; j < start.size(); ++j) {
      if (j != skip) verts.push_back(start[j]);
    }
    facets.push_back(make_facet(std::move(verts)));
  }

  std::vector<bool> used(pts.size(), false);
  for (int v : start) used[v] = true;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (used[p]) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (dot(facets[f].normal, pts[p]) > facets[f].offset) visible.push_back(f);
    }
    if (visible.empty()) continue;
    std::map<std::vector<int>, int> ridges;
    for (std::size_t f : visible) {
      const auto& verts = facets[f].verts;
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t j = 0; j < verts.size(); ++j) {
          if (j != drop) ridge.push_back(verts[j]);
        }
        ++ridges[ridge];
      }
    }
    std::vector<bool> is_visible(facets.size(), false);
    for (std::size_t f : visible) is_visible[f] = true;
    std::vector<SimplexFacet> next;
    next.reserve(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!is_visible[f]) next.push_back(std::move(facets[f]));
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(static_cast<int>(p));
      next.push_back(make_facet(std::move(verts)));
    }
    facets = std::move(next);
  }
  return facets;
}

double norm2(const IntVec& v) {
  double s = 0.0;
  for (i64 x : v) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::vector<Exponents> points) {
  if (points.empty()) throw Error(ErrorKind::kInvalidArgument, "convex hull of an empty point set");
  const int n = static_cast<int>(points[0].size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw Error(ErrorKind::kDimensionMismatch, "points of different dimensions");
    for (int x : p) {
      if (std::abs(x) >= kMaxCoordinate) throw Error(ErrorKind::kResource, "polytope coordinate out of range");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope P;
  P.ambient_ = n;

  std::vector<IntVec> pts;
  for (const auto& p : points) pts.emplace_back(p.begin(), p.end());

  // Affine hull.
  Echelon ech;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec d(n);
    for (int c = 0; c < n; ++c) d[c] = pts[i][c] - pts[0][c];
    ech.insert(std::move(d));
  }
  const int k = static_cast<int>(ech.rows.size());
  P.dim_ = k;
  for (auto& e : ech.complement(n)) {
    const i64 b = checked_narrow(dot(e, pts[0]));
    P.equalities_.push_back({std::move(e), b});
  }
  std::vector<int> coords = ech.pivots;
  std::sort(coords.begin(), coords.end());

  auto lift = [&](const IntVec& projected_normal, i64 offset) {
    HalfSpace h;
    h.normal.assign(n, 0);
    for (int j = 0; j < k; ++j) h.normal[coords[j]] = projected_normal[j];
    h.offset = offset;
    return h;
  };

  if (k == 0) {
    P.vertices_ = {points[0]};
    P.normalized_volume_ = (n == 0) ? 1 : 0;
    return P;
  }

  std::vector<IntVec> proj;
  for (const auto& p : pts) {
    IntVec y(k);
    for (int j = 0; j < k; ++j) y[j] = p[coords[j]];
    proj.push_back(std::move(y));
  }

  if (k == 1) {
    auto [lo, hi] = std::minmax_element(proj.begin(), proj.end());
    P.vertices_ = {points[lo - proj.begin()], points[hi - proj.begin()]};
    std::sort(P.vertices_.begin(), P.vertices_.end());
    P.facets_.push_back(lift({-1}, -(*lo)[0]));
    P.facets_.push_back(lift({1}, (*hi)[0]));
    P.normalized_volume_ = (n == 1) ? (*hi)[0] - (*lo)[0] : 0;
    return P;
  }

  const auto simplices = simplicial_hull(proj);

  std::set<std::pair<IntVec, i64>> distinct;
  for (const auto& f : simplices) distinct.insert({f.normal, f.offset});
  std::vector<std::pair<IntVec, i64>> facets(distinct.begin(), distinct.end());

  std::set<int> candidate_set;
  for (const auto& f : simplices) candidate_set.insert(f.verts.begin(), f.verts.end());
  std::vector<int> candidates(candidate_set.begin(), candidate_set.end());

  std::vector<std::vector<bool>> incident(candidates.size(), std::vector<bool>(facets.size()));
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t f = 0; f < facets.size(); ++f) {
      incident[c][f] = dot(facets[f].first, proj[candidates[c]]) == facets[f].second;
    }
  }
  // A boundary point is a vertex iff no other boundary point lies on every
  // facet through it.
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    bool vertex = true;
    for (std::size_t o = 0; o < candidates.size() && vertex; ++o) {
      if (o == c) continue;
      bool covers = true;
      for (std::size_t f = 0; f < facets.size() && covers; ++f) {
        if (incident[c][f] && !incident[o][f]) covers = false;
      }
      if (covers) vertex = false;
    }
    if (vertex) P.vertices_.push_back(points[candidates[c]]);
  }
  std::sort(P.vertices_.begin(), P.vertices_.end());

  for (const auto& [normal, offset] : facets) P.facets_.push_back(lift(normal, offset));

  if (k == n) {
    // Fan from one fixed boundary point over the boundary simplices.
    const IntVec& base = proj[simplices.front().verts.front()];
    i128 total = 0;
    for (const auto& f : simplices) {
      std::vector<std::vector<i128>> m;
      for (int v : f.verts) {
        std::vector<i128> row(k);
        for (int j = 0; j < k; ++j) row[j] = proj[v][j] - base[j];
        m.push_back(std::move(row));
      }
      const i128 det = determinant(std::move(m));
      total += det < 0 ? -det : det;
    }
    P.normalized_volume_ = checked_narrow(total);
  }
  return P;
}

LatticePolytope LatticePolytope::simplex(int dim, int scale) {
  std::vector<Exponents> pts{Exponents(dim, 0)};
  for (int i = 0; i < dim; ++i) {
    Exponents e(dim, 0);
    e[i] = scale;
    pts.push_back(std::move(e));
  }
  return hull(std::move(pts));
}

LatticePolytope LatticePolytope::cube(int dim, int scale) {
  std::vector<Exponents> pts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Exponents e(dim, 0);
    for (int i = 0; i < dim; ++i) e[i] = ((mask >> i) & 1) ? scale : 0;
    pts.push_back(std::move(e));
  }
  return hull(std::move(pts));
}

double LatticePolytope::volume() const {
  double f = 1.0;
  for (int i = 2; i <= ambient_; ++i) f *= i;
  return static_cast<double>(normalized_volume_) / f;
}

bool LatticePolytope::contains(std::span<const double> point, double tol) const {
  if (static_cast<int>(point.size()) != ambient_) {
    throw Error(ErrorKind::kDimensionMismatch, "point dimension differs from polytope dimension");
  }
  auto value = [&](const HalfSpace& h) {
    double s = -static_cast<double>(h.offset);
    for (int i = 0; i < ambient_; ++i) s += static_cast<double>(h.normal[i]) * point[i];
    return s / norm2(h.normal);
  };
  for (const auto& e : equalities_) {
    if (std::abs(value(e)) > tol) return false;
  }
  for (const auto& f : facets_) {
    if (value(f) > tol) return false;
  }
  return true;
}

LatticePolytope LatticePolytope::scaled(int factor) const {
  std::vector<Exponents> pts = vertices_;
  for (auto& p : pts) {
    for (int& x : p) x *= factor;
  }
  if (pts.empty()) return *this;
  return hull(std::move(pts));
}

LatticePolytope newton_polytope(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "Newton polytope of the zero polynomial");
  return LatticePolytope::hull(support(p));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dimension() != q.ambient_dimension()) {
    throw Error(ErrorKind::kDimensionMismatch, "Minkowski sum of polytopes in different dimensions");
  }
  std::vector<Exponents> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      Exponents s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return LatticePolytope::hull(std::move(sums));
}

LatticePolytope minkowski_sum(std::span<const LatticePolytope> polytopes, int ambient) {
  LatticePolytope acc = LatticePolytope::hull({Exponents(ambient, 0)});
  for (const auto& p : polytopes) acc = minkowski_sum(acc, p);
  return acc;
}

std::vector<Exponents> lattice_points(const LatticePolytope& p, std::span<const double> shift, double tol) {
  const int n = p.ambient_dimension();
  if (static_cast<int>(shift.size()) != n) throw Error(ErrorKind::kDimensionMismatch, "shift dimension mismatch");
  std::vector<int> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    int mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = static_cast<int>(std::ceil(mn + shift[i] - tol));
    hi[i] = static_cast<int>(std::floor(mx + shift[i] + tol));
    if (lo[i] > hi[i]) return {};
  }
  std::vector<Exponents> result;
  Exponents x = lo;
  std::vector<double> y(n);
  while (true) {
    for (int i = 0; i < n; ++i) y[i] = x[i] - shift[i];
    if (p.contains(y, tol)) result.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return result;  // odometer order is lexicographic
}

namespace {

i64 factorial(int n) {
  i64 f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int check_mixed_volume_input(std::span<const LatticePolytope> polytopes) {
  const int n = static_cast<int>(polytopes.size());
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "mixed volume of no polytopes");
  for (const auto& p : polytopes) {
    if (p.ambient_dimension() != n) {
      throw Error(ErrorKind::kDimensionMismatch, "mixed volume needs n polytopes in R^n");
    }
  }
  return n;
}

i64 divide_normalized(i128 total, int n) {
  const i64 f = factorial(n);
  if (total % f != 0) {
    std::clog << "mroot: warning: mixed volume residual "
              << static_cast<double>(total % f) / static_cast<double>(f) << " rounded away\n";
    return checked_narrow((total + f / 2) / f);
  }
  return checked_narrow(total / f);
}

}  // namespace

std::int64_t mixed_volume_inclusion_exclusion(std::span<const LatticePolytope> polytopes) {
  const int n = check_mixed_volume_input(polytopes);
  const int subsets = 1 << n;
  std::vector<LatticePolytope> sums(subsets);
  sums[0] = LatticePolytope::hull({Exponents(n, 0)});
  i128 total = 0;
  for (int mask = 1; mask < subsets; ++mask) {
    const int low = std::countr_zero(static_cast<unsigned>(mask));
    sums[mask] = minkowski_sum(sums[mask & (mask - 1)], polytopes[low]);
    const int size = std::popcount(static_cast<unsigned>(mask));
    const i128 sign = ((n - size) % 2 == 0) ? 1 : -1;
    total += sign * sums[mask].normalized_volume();
  }
  return divide_normalized(total, n);
}

std::int64_t mixed_volume_interpolation(std::span<const LatticePolytope> polytopes) {
  const int n = check_mixed_volume_input(polytopes);
  std::vector<LatticePolytope> doubled;
  for (const auto& p : polytopes) doubled.push_back(p.scaled(2));
  i128 total = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<LatticePolytope> terms;
    for (int i = 0; i < n; ++i) terms.push_back(((mask >> i) & 1) ? doubled[i] : polytopes[i]);
    const LatticePolytope sum = minkowski_sum(terms, n);
    const int size = std::popcount(static_cast<unsigned>(mask));
    const i128 sign = ((n - size) % 2 == 0) ? 1 : -1;
    total += sign * sum.normalized_volume();
  }
  return divide_normalized(total, n);
}

std::int64_t mixed_volume(std::span<const LatticePolytope> polytopes) {
  const i64 a = mixed_volume_inclusion_exclusion(polytopes);
  const i64 b = mixed_volume_interpolation(polytopes);
  if (a != b) {
    throw Error(ErrorKind::kConsistency, "mixed volume methods disagree: " + std::to_string(a) + " vs " +
                                             std::to_string(b));
  }
  return a;
}

std::int64_t bkk_bound(const PolynomialSystem& system) {
  if (static_cast<int>(system.size()) != system.varcount()) {
    throw Error(ErrorKind::kNonSquare, "square system required: " + std::to_string(system.size()) +
                                           " polynomials in " + std::to_string(system.varcount()) +
                                           " variables");
  }
  std::vector<LatticePolytope> polytopes;
  for (const auto& p : system.polys()) polytopes.push_back(newton_polytope(p));
  return mixed_volume(polytopes);
}

std::int64_t multihom_bezout(std::span<const std::vector<int>> degrees, std::span<const int> block_sizes) {
  const int k = static_cast<int>(block_sizes.size());
  int n = 0;
  for (int s : block_sizes) {
    if (s < 0) throw Error(ErrorKind::kInvalidArgument, "negative block size");
    n += s;
  }
  if (static_cast<int>(degrees.size()) != n) {
    throw Error(ErrorKind::kDimensionMismatch, "block mismatch: " + std::to_string(degrees.size()) +
                                                   " degree vectors for " + std::to_string(n) + " unknowns");
  }
  for (const auto& d : degrees) {
    if (static_cast<int>(d.size()) != k) {
      throw Error(ErrorKind::kDimensionMismatch, "block mismatch: degree vector length differs from block count");
    }
  }
  // Truncated product over exponent vectors bounded by the block sizes.
  std::map<std::vector<int>, i128> poly{{std::vector<int>(k, 0), 1}};
  for (const auto& d : degrees) {
    std::map<std::vector<int>, i128> next;
    for (const auto& [e, c] : poly) {
      for (int j = 0; j < k; ++j) {
        if (d[j] == 0 || e[j] == block_sizes[j]) continue;
        auto f = e;
        ++f[j];
        next[f] += c * d[j];
      }
    }
    poly = std::move(next);
  }
  auto it = poly.find(std::vector<int>(block_sizes.begin(), block_sizes.end()));
  return it == poly.end() ? 0 : checked_narrow(it->second);
}

std::vector<double> default_shift(int n, std::uint64_t seed, double eps) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 0.0);
  std::vector<double> v(n);
  for (double& x : v) {
    do {
      x = u(rng);
    } while (x == -1.0 || x == 0.0);
    x *= eps;
  }
  return v;
}

}  // namespace mroot

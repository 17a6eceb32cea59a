#include "mroot/solver.hpp"

#include <random>

#include "mroot/macaulay.hpp"
#include "mroot/random.hpp"

namespace mroot {

RootSet solve(const PolynomialSystem& system, const BuildOptions& options) {
  const QuotientRep q = build(system, options);
  return extract_roots(q, system, options.seed, options.tol);
}

PolynomialSystem generate_dense_system(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 400));
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto monomials = monomials_up_to_degree(n, d);
  std::vector<Polynomial> polys;
  for (int i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (const auto& e : monomials) terms.push_back({normal(rng), e});
    polys.push_back(Polynomial::from_terms(n, std::move(terms)));
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return PolynomialSystem(std::move(polys), std::move(names), Mode::kAffine);
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::int64_t dense_macaulay_entries(int n, int d) {
  const int rho = n * d - n + 1;
  const std::int64_t rows = binomial(rho + n, n);
  const std::int64_t cols = n * binomial(rho - d + n, n);
  return rows * cols;
}

}  // namespace mroot

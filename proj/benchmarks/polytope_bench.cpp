#include <benchmark/benchmark.h>

#include <random>

#include "mroot/polytope.hpp"

namespace {

std::vector<mroot::LatticePolytope> random_tuple(int n, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(0, 12);
  std::vector<mroot::LatticePolytope> out;
  for (int i = 0; i < n; ++i) {
    std::vector<mroot::Exponents> pts(points, mroot::Exponents(n));
    for (auto& p : pts)
      for (auto& v : p) v = c(rng);
    out.push_back(mroot::LatticePolytope::hull(pts));
  }
  return out;
}

void BM_MixedVolumeInclusionExclusion(benchmark::State& state) {
  const auto ps = random_tuple(static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mroot::mixed_volume_inclusion_exclusion(ps));
}
BENCHMARK(BM_MixedVolumeInclusionExclusion)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MixedVolumeInterpolation(benchmark::State& state) {
  const auto ps = random_tuple(static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mroot::mixed_volume_interpolation(ps));
}
BENCHMARK(BM_MixedVolumeInterpolation)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_LatticePoints(benchmark::State& state) {
  const auto ps = random_tuple(3, 5, 4);
  const auto sum = mroot::minkowski_sum(ps, 3);
  const std::vector<double> v = mroot::default_shift(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mroot::lattice_points(sum, v));
}
BENCHMARK(BM_LatticePoints)->Unit(benchmark::kMillisecond);

}  // namespace

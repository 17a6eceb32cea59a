#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Core>

namespace mroot {

inline constexpr std::uint64_t kDefaultSeed = 1;

// Independent stream seeds from one user seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Entries uniform on the unit circle.
inline Eigen::VectorXcd random_unit_complex(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Eigen::VectorXcd v(n);
  for (long i = 0; i < n; ++i) v(i) = std::polar(1.0, angle(rng));
  return v;
}

// Haar-like random unitary from the QR factor of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(long n, std::uint64_t seed);

}  // namespace mroot

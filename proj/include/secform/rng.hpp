#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "secform/types.hpp"

namespace secform::rng {

// Counter-based generator: word k of stream `seed` is a pure function of
// (seed, k), so draws are bit-reproducible and order-independent.
// Mixing function is SplitMix64 (Steele/Lea/Vigna) with its published
// constants; the stream position enters through the Weyl increment
// 0x9E3779B97F4A7C15.
inline std::uint64_t word_at(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent sub-stream seed (stream j of `seed`).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t j) {
  return word_at(seed ^ 0xA5A5A5A5A5A5A5A5ULL, j);
}

/// Uniform double in [0, 1): top 53 bits of word k.
inline double uniform01(std::uint64_t seed, std::uint64_t k) {
  return static_cast<double>(word_at(seed, k) >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1].
inline double uniform01_open(std::uint64_t seed, std::uint64_t k) {
  return static_cast<double>((word_at(seed, k) >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on words 2k and 2k+1.
inline double gaussian(std::uint64_t seed, std::uint64_t k) {
  const double u1 = uniform01_open(seed, 2 * k);
  const double u2 = uniform01(seed, 2 * k + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Complex standard normal (independent N(0,1) real and imaginary parts),
/// consuming gaussian slots 2k and 2k+1.
inline cplx complex_gaussian(std::uint64_t seed, std::uint64_t k) {
  return {gaussian(seed, 2 * k), gaussian(seed, 2 * k + 1)};
}

/// The j-th pseudo-random unit vector of dimension n for this seed.
/// Components are complex Gaussians, normalized.
inline ComplexVector unit_vector(std::uint64_t seed, std::size_t n, std::uint64_t j) {
  ComplexVector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = complex_gaussian(seed, j * n + i);
  const double r = norm2(u);
  if (r < 1e-300) {
    // Unreachable in practice; keep the map total and deterministic.
    ComplexVector e(n, cplx{0.0, 0.0});
    e[0] = 1.0;
    return e;
  }
  for (cplx& v : u) v /= r;
  return u;
}

/// Dense matrix with independent complex Gaussian entries.
inline ComplexMatrix gaussian_matrix(std::uint64_t seed, std::size_t n) {
  ComplexMatrix g(n);
  for (std::size_t k = 0; k < n * n; ++k) g.data()[k] = complex_gaussian(seed, k);
  return g;
}

}  // namespace secform::rng

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace grl {

/// Engine used throughout; its output sequence is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits (platform independent,
/// unlike std::uniform_real_distribution).
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n). Consumes exactly one draw.
inline std::size_t uniform_index(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  const auto i = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
  return i < n ? i : n - 1;
}

/// Draws an index from a probability vector. Consumes exactly one draw.
inline std::size_t sample_index(std::span<const double> probs, Rng& rng) {
  if (probs.empty()) throw std::invalid_argument("sample_index: empty distribution");
  const double u = uniform01(rng);
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    acc += probs[i];
    last_positive = i;
    if (u < acc) return i;
  }
  // rounding: mass summed to slightly below 1
  return last_positive;
}

/// SplitMix64 finalizer; used to derive independent seeds for named streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace grl

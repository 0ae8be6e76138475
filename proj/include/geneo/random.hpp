#pragma once

#include <cstdint>
#include <random>

namespace geneo {

using Rng = std::mt19937_64;

/// Seed for work unit `index` of a run seeded with `seed`. Independent of
/// scheduling, so parallel runs reproduce the sequential ones.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

/// Uniform draw from the open interval (lo, hi).
inline double uniform_open(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  for (;;) {
    const double v = dist(rng);
    if (v > lo && v < hi) return v;
  }
}

/// Uniform draw from {lo, ..., hi}.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace geneo

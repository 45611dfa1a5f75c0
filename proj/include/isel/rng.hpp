#pragma once

#include <cstdint>

namespace isel {

/// Counter-style 64-bit generator (splitmix64). Cheap to seed, trivially
/// reproducible, and independent streams come from remixing the seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe under log().
  double next_unit_positive() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }
};

/// Deterministic stream derivation: remix of seed and tag.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

/// Per-instance experiment seed from a base seed, a sweep value and an
/// instance index (documented 64-bit mix; stable across runs).
std::uint64_t derive_instance_seed(std::uint64_t base, std::int64_t sweep_value,
                                   std::int64_t instance_index);

/// Standard normal deviates via Box-Muller over SplitMix64 uniforms;
/// independent of platform library distributions.
struct NormalStream {
  SplitMix64 rng;
  bool has_spare = false;
  double spare = 0.0;

  explicit NormalStream(std::uint64_t seed) : rng(seed) {}
  double next();
};

}  // namespace isel

#pragma once

// Deterministic random number generation. The generator is splitmix64
// (Steele, Lea, Flood; public domain reference implementation), a documented
// fixed algorithm: the 64-bit integer stream is bit-identical for a given
// seed on every platform. Gaussian deviates use Box-Muller on 53-bit
// uniforms, so floating-point output is identical wherever IEEE-754 doubles
// and the platform libm agree (the usual case on x86-64/aarch64 Linux).

#include <cstdint>

namespace holosem {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // splitmix64 step.
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of precision.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal deviate via Box-Muller; pairs are cached.
  double next_gaussian();

  // Derived seed for independent trial streams: seed XOR trial index.
  // Consecutive derived seeds yield decorrelated streams because splitmix64
  // is designed for sequentially seeded use.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return seed ^ index;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace holosem

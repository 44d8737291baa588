#pragma once

#include <cstdint>

namespace dsdisk {

// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state, identical output on
// every platform, which keeps perturbations and sampling bit-reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi].
  double Uniform(double lo, double hi) { return lo + (hi - lo) * NextDouble(); }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = (~uint64_t{0}) - (~uint64_t{0}) % bound;
    uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % bound;
  }

  bool Bernoulli(double p) { return NextDouble() < p; }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

// Seed of an independent stream, e.g. one per trial.
inline uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  SplitMix64 mix(seed ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  mix.Next();
  return mix.Next();
}

}  // namespace dsdisk

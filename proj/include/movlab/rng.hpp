#pragma once

#include <cstdint>

namespace movlab {

// Deterministic, portable PRNG used for all generation paths.
// xoshiro256** seeded via SplitMix64; identical streams on every platform,
// so seeds written into configs and CSV files stay reproducible.

inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derives an independent substream seed from (seed, index).
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t s = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  return splitmix64_next(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, bound), bound >= 1. Lemire multiply-shift with rejection.
  uint64_t next_below(uint64_t bound) {
    __uint128_t r = static_cast<__uint128_t>(next()) * bound;
    auto lo = static_cast<uint64_t>(r);
    if (lo < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        r = static_cast<__uint128_t>(next()) * bound;
        lo = static_cast<uint64_t>(r);
      }
    }
    return static_cast<uint64_t>(r >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t s_[4];
};

}  // namespace movlab

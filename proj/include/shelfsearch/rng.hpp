// Seedable, platform-stable random number generator.
//
// Algorithm: xoshiro256++ (Blackman & Vigna), state initialized with four
// rounds of splitmix64 over the seed. Doubles are drawn as the top 53 bits
// of the next output scaled by 2^-53, so the stream is identical on every
// platform with IEEE-754 doubles. std::random distributions are avoided on
// purpose: their output is implementation-defined.
#pragma once

#include <cstdint>

namespace shelfsearch {

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stable hash chain used to derive per-scene seeds from
/// (base seed, cell, index, attempt).
inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b,
                            uint64_t c = 0) {
  uint64_t s = base;
  (void)splitmix64(s);
  s ^= 0x9E3779B97F4A7C15ULL * (a + 1);
  (void)splitmix64(s);
  s ^= 0xC2B2AE3D27D4EB4FULL * (b + 1);
  (void)splitmix64(s);
  s ^= 0x165667B19E3779F9ULL * (c + 1);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform_double();
  }

  /// Uniform integer in [0, n). Multiply-high mapping; the bias for any
  /// desk-scale n is below 2^-53 and the mapping is platform-stable.
  uint64_t uniform_int(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next()) * n) >> 64);
  }

 private:
  static uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  uint64_t state_[4] = {};
};

}  // namespace shelfsearch

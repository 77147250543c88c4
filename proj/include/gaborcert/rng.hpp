#pragma once

// Deterministic 64-bit generator (SplitMix64) so sampled experiments
// reproduce bit-for-bit across platforms.  Not cryptographic.

#include <cstdint>

namespace gaborcert {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform on [0,1), 53-bit dyadic (hence exactly representable)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform on [-1,1)
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }
};

}  // namespace gaborcert

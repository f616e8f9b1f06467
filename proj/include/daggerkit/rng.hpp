#pragma once

#include <cstdint>

namespace dk {

/// xoshiro256** seeded through splitmix64. Fully specified so that suite
/// replays are byte-identical across platforms and standard libraries.
struct Rng {
  std::uint64_t s[4];

  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : s) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t next() {
    std::uint64_t result = rotl(s[1] * 5, 7) * 9;
    std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  /// Uniform-enough draw in [0, n); n = 0 yields 0.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long intIn(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }
};

}  // namespace dk

#pragma once

#include <cstdint>

namespace tppforge {

// splitmix64: tiny deterministic generator with identical output on every
// platform, so seeded reports and frozen test vectors are reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); bound must be positive. The modulo
  // bias is negligible for the small bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Draw in [lo, hi] inclusive.
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace tppforge

#pragma once

#include <matchlab/rational.hpp>

#include <cstdint>

namespace matchlab {

// SplitMix64: tiny, portable, deterministic across platforms. All sampling
// and random test data go through this so reports reproduce bit-for-bit.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }
};

// Rational with numerator in [-99, 99] and denominator in [1, 99].
inline Rational random_bounded_rational(SplitMix64& rng) {
  long num = static_cast<long>(rng.below(199)) - 99;
  long den = static_cast<long>(rng.below(99)) + 1;
  return Rational(num, den);
}

// Nonzero variant, for places where a degenerate zero would weaken a test.
inline Rational random_nonzero_rational(SplitMix64& rng) {
  Rational r = random_bounded_rational(rng);
  while (r.is_zero()) r = random_bounded_rational(rng);
  return r;
}

}  // namespace matchlab

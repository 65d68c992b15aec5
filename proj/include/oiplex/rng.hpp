#pragma once

#include <cstdint>

#include "oiplex/rational.hpp"

namespace oiplex {

// Seeded generator with self-contained bounded sampling, so identical seeds
// reproduce identical games and noise on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // splitmix-style warmup avoids correlated low-entropy seeds
    next();
    next();
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n) - 1;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return x % n;
  }

  // Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() >> 32) & 1; }

  // Uniform integer in [lo, hi] for arbitrary-size bounds.
  BigInt big_range(const BigInt& lo, const BigInt& hi) {
    BigInt span = hi - lo;
    if (span <= 0) return lo;
    unsigned bits = static_cast<unsigned>(msb(span)) + 1;
    BigInt x;
    do {
      x = 0;
      unsigned produced = 0;
      while (produced < bits) {
        x <<= 64;
        x |= BigInt(next());
        produced += 64;
      }
      x >>= (produced - bits);
    } while (x > span);
    return lo + x;
  }

  // Independent stream for a sub-task; mixing the tag through the core
  // permutation keeps streams uncorrelated across worker threads.
  Rng fork(std::uint64_t tag) {
    Rng child(state_ ^ (0xd1342543de82ef95ULL * (tag + 1)));
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace oiplex

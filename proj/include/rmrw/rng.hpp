#ifndef RMRW_RNG_HPP
#define RMRW_RNG_HPP

#include <cstdint>

#include "rmrw/bigint.hpp"

namespace rmrw {

// Deterministic, platform-independent generator (splitmix64). The standard
// <random> distributions are implementation-defined, which would break the
// byte-identical-report contract of the simulator, so all randomness in the
// library flows through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// Uniform BigInt in [0, bound), bound >= 1.
  BigInt below_big(const BigInt& bound) {
    if (bound <= 1) return 0;
    const long bits = static_cast<long>(boost::multiprecision::msb(bound)) + 1;
    const long words = (bits + 63) / 64;
    for (;;) {
      BigInt v = 0;
      for (long w = 0; w < words; ++w) v = (v << 64) | next_u64();
      v >>= words * 64 - bits;
      if (v < bound) return v;
    }
  }

  /// Child stream with an independent-looking state; used for per-trial seeds.
  Rng fork(std::uint64_t stream) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    child.next_u64();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace rmrw

#endif

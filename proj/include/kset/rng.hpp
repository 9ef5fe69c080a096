#ifndef KSET_RNG_HPP
#define KSET_RNG_HPP

#include <cstdint>

namespace kset {

/// xoshiro256** 1.0 (Blackman & Vigna, public domain), state seeded with
/// splitmix64. Chosen over std::random distributions because the whole
/// stream, including the double conversion below, is specified exactly and
/// reproduces bit-for-bit in any language.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(uint64_t seed) {
    // splitmix64 expansion of the seed into the four state words.
    uint64_t z = seed;
    for (auto& word : s_) {
      z += 0x9e3779b97f4a7c15ULL;
      uint64_t x = z;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      word = x ^ (x >> 31);
    }
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

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

  /// Uniform integer in [0, n).
  int below(int n) {
    const int v = static_cast<int>(next_double() * n);
    return v >= n ? n - 1 : v;  // guards the measure-zero rounding edge
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t s_[4];
};

}  // namespace kset

#endif  // KSET_RNG_HPP

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace oraclesim {

// splitmix64; used to expand seeds and to derive labeled child streams.
struct SplitMix64 {
  std::uint64_t state;

  constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Stable label hash (FNV-1a 64) for stream derivation.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Child seed for an independent named stream. Streams derived from the same
// master seed with different labels never perturb one another, so adding an
// agent to a scenario leaves every other agent's draws unchanged.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  SplitMix64 mix(master ^ fnv1a64(label));
  std::uint64_t a = mix.next();
  std::uint64_t b = mix.next();
  return a ^ (b << 1 | b >> 63);
}

// xoshiro256**: the artifact's single PRNG. Byte-for-byte reproducible on
// every platform, unlike the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    SplitMix64 mix(seed);
    for (auto& word : s_) word = mix.next();
  }

  std::uint64_t next_u64() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Low byte of the next word; the beacon reads exactly one of these.
  std::uint8_t next_byte() { return static_cast<std::uint8_t>(next_u64()); }

  // Uniform in [0, 1), 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound) via rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform real in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  void fill_bytes(std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
      std::uint64_t word = next_u64();
      for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
        out[i] = static_cast<std::uint8_t>(word >> (b * 8));
      }
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace oraclesim

#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace snb {

// snb PRNG v1 -- pinned so every seeded run reproduces bit-for-bit on
// any platform. The generator is xoshiro256** (Blackman/Vigna, public
// domain) with its four state words filled by successive outputs of
// splitmix64 applied to the user seed:
//
//   s[i] = splitmix64_next(seed)  for i = 0..3
//
// Derived quantities, all versioned with the generator:
//   next_unit():  (next_u64() >> 11) * 2^-53, uniform in [0, 1)
//   next_below(b): floor(next_u64() * b / 2^64) via 128-bit multiply
//   mix(seed, k): splitmix64 finalizer of seed + (k+1) * 0x9E3779B97F4A7C15,
//                 used to derive independent per-trial/per-worker seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64_next(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  bool bernoulli(double p) { return next_unit() < p; }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  static std::uint64_t splitmix64_next(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace snb

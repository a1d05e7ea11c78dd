#pragma once

#include <cstdint>

namespace chamberworks {

/// Counter-based deterministic PRNG (splitmix64 over seed/counter), so
/// sampled sweeps reproduce exactly across platforms for a fixed --seed.
class PRNG {
public:
  explicit PRNG(std::uint64_t seed) : seed_(seed), counter_(0) {}

  static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ull + counter + 1;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return at(seed_, counter_++); }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

} // namespace chamberworks

#pragma once

#include <cstdint>
#include <random>

namespace affq {

/* Default seed for every randomized routine; overridable everywhere. */
inline constexpr std::uint64_t kDefaultSeed = 0xAFF1DEull;

/* Deterministic RNG.  mt19937_64 has a fixed standardized output sequence and
   the sampling helpers below avoid std::uniform_int_distribution, whose
   output is implementation-defined.  Identical seeds give identical streams
   on every platform. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), g_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return g_(); }

  /* Uniform in [0, n) by rejection; n >= 1. */
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = g_();
    } while (x >= limit);
    return x % n;
  }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /* Independent child stream; used so retry loops reseed reproducibly. */
  Rng fork(std::uint64_t salt) const {
    std::uint64_t z = seed_ ^ (salt + 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 g_;
};

}  // namespace affq

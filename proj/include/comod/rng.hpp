#pragma once

#include <cstdint>

#include "comod/field.hpp"

namespace comod {

// SplitMix64. Hand-rolled so that seeded runs are bit-identical across
// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0; rejection keeps it unbiased
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1) != 0; }

  // small random field element; nonzero_only skews away from 0
  template <class F>
  F scalar(const F& exemplar, bool nonzero_only = false) {
    if constexpr (std::is_same_v<F, Rat>) {
      for (;;) {
        Rat r(range(-3, 3), range(1, 3));
        if (!nonzero_only || !is_zero(r)) return r;
      }
    } else {
      std::uint64_t p = exemplar.modulus();
      if (nonzero_only) return Fp(1 + below(p - 1), p);
      return Fp(below(p), p);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace comod

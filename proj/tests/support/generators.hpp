// Deterministic random generators for property-style tests.
#pragma once

#include <cstdint>
#include <random>

#include "sk/arith.hpp"
#include "sk/knot.hpp"

namespace sk_test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  std::int64_t coprime_to(std::int64_t p) {
    while (true) {
      const std::int64_t x = uniform(1, p - 1);
      if (sk::gcd_ll(x, p) == 1) return x;
    }
  }

  // uniform primitive knot with p in [min_p, max_p]
  sk::SimpleKnot primitive_knot(std::int64_t min_p, std::int64_t max_p) {
    const std::int64_t p = uniform(min_p, max_p);
    return sk::SimpleKnot{p, coprime_to(p), coprime_to(p)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sk_test

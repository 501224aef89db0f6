#pragma once

#include <cstdint>

#include "sk/errors.hpp"

namespace sk {

// Every product of two residues goes through a 128-bit intermediate, so the
// library is exact for any modulus up to the word budget below.
inline constexpr std::int64_t kHardModulusLimit = (std::int64_t{1} << 31) - 1;

// Word budget for moduli. Defaults to kHardModulusLimit; the SIMPLEKNOT_MAX_P
// environment variable lowers it (values above the hard limit are clamped).
std::int64_t modulus_budget();

// Nonnegative gcd; gcd(0,0) = 0.
std::int64_t gcd_ll(std::int64_t a, std::int64_t b);

// x mod p in [0, p-1], correct for negative x. Requires p >= 2.
std::int64_t normalized_residue(std::int64_t x, std::int64_t p);

// a*b mod p without overflow.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p);

// Inverse of x mod p by extended Euclid (p need not be prime).
// Throws NotInvertible when gcd(x, p) != 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t p);

// A value reduced mod p. 0 <= value < modulus always holds.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 2;

  static Residue reduce(std::int64_t x, std::int64_t p) {
    return Residue{normalized_residue(x, p), p};
  }
  friend bool operator==(const Residue&, const Residue&) = default;
};

Residue mod_inverse(Residue x);

}  // namespace sk

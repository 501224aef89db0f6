#include "sk/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace sk {

std::int64_t modulus_budget() {
  static const std::int64_t budget = [] {
    if (const char* env = std::getenv("SIMPLEKNOT_MAX_P")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end != env && v >= 2 && v <= kHardModulusLimit) return std::int64_t{v};
    }
    return kHardModulusLimit;
  }();
  return budget;
}

std::int64_t gcd_ll(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t normalized_residue(std::int64_t x, std::int64_t p) {
  std::int64_t r = x % p;
  if (r < 0) r += p;
  return r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  const __int128 prod = static_cast<__int128>(a) * b;
  std::int64_t r = static_cast<std::int64_t>(prod % p);
  if (r < 0) r += p;
  return r;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
  // Extended Euclid on (x mod p, p); invariants r = s*x (mod p).
  std::int64_t r0 = normalized_residue(x, p), r1 = p;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1)
    throw NotInvertible("mod_inverse: " + std::to_string(x) + " is not a unit mod " +
                        std::to_string(p));
  return normalized_residue(s0, p);
}

Residue mod_inverse(Residue x) {
  return Residue{mod_inverse(x.value, x.modulus), x.modulus};
}

}  // namespace sk

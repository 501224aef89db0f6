#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sk/knot.hpp"
#include "sk/laurent.hpp"

namespace sk {

// The f_{p,q,k} grading profile of K(p,q,k):
//   f(0) = 0,  f(i+1) - f(i) = k-p if iq mod p in [1,k], k otherwise.
// width = max f - min f; doubled_gradings is the multiset {2f(i) - (max+min)}
// (twice the symmetric-normalized Alexander gradings), sorted descending;
// genus = (width - p + 1)/2 by Ni's theorem, present only for primitive K.
struct GradingProfile {
  std::vector<std::int64_t> f;
  std::int64_t width = 0;
  std::vector<std::int64_t> doubled_gradings;
  std::optional<std::int64_t> genus;
};

GradingProfile f_profile(const SimpleKnot& K);

// Streaming max-min pass over the recurrence: O(p) time, O(1) space,
// no allocation. Safe to run concurrently from any number of workers.
std::int64_t width_kernel(std::int64_t p, std::int64_t q, std::int64_t k) noexcept;

// Validating convenience wrapper over width_kernel.
std::int64_t width(std::int64_t p, std::int64_t q, std::int64_t k);

// Graded Euler characteristic of HFK: one +1 term per generator,
// exponents the symmetric-normalized gradings (half-integers when p is
// even). Satisfies chi(1) = p. The two-argument form reuses a profile
// already computed for K.
LaurentPolynomial euler_characteristic(const SimpleKnot& K);
LaurentPolynomial euler_characteristic(const SimpleKnot& K, const GradingProfile& profile);

// Alexander polynomial: divides (t-1) * sum_i t^{f(i)} exactly by
// t^p - 1, then recenters so Delta(t^{-1}) = Delta(t) and Delta(1) = 1.
// Integer exponents. Throws NotPrimitive; a nonzero remainder
// (impossible unless the implementation is broken) throws
// DivisionNotExact instead of rounding.
LaurentPolynomial alexander_polynomial(const SimpleKnot& K);
LaurentPolynomial alexander_polynomial(const SimpleKnot& K, const GradingProfile& profile);

}  // namespace sk

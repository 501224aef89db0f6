#pragma once

#include <cstdint>
#include <vector>

#include "sk/arith.hpp"

namespace sk {

// The simple knot K(p,q,k) in the lens space L(p,q). q and k are stored
// reduced to [0,p-1]; gcd(q,p) = 1 and k != 0 are enforced by validate().
struct SimpleKnot {
  std::int64_t p = 2;
  std::int64_t q = 1;
  std::int64_t k = 1;

  friend bool operator==(const SimpleKnot&, const SimpleKnot&) = default;
  friend auto operator<=>(const SimpleKnot&, const SimpleKnot&) = default;
};

// Reduces q,k mod p and checks the lens-space and knot invariants.
// Throws InvalidLensSpace (p < 2 or gcd(q,p) != 1), InvalidKnot (k ≡ 0),
// ResourceLimit (p above the word budget).
SimpleKnot validate(std::int64_t p, std::int64_t q, std::int64_t k);

// Coefficient of the beta-core class: [K] = k[b].
std::int64_t homology_class(const SimpleKnot& K);

// True iff [K] generates H1(L(p,q)), i.e. gcd(k,p) = 1.
bool is_primitive(const SimpleKnot& K);

// Self-linking numerator a with K·K = a/p mod 1: a = k^2 q' mod p,
// qq' ≡ 1 (p). Throws NotPrimitive.
std::int64_t self_linking(const SimpleKnot& K);

// True iff k^2 ≡ ±q (mod p): K admits an integer homology-sphere surgery.
bool has_integer_zhs_surgery(const SimpleKnot& K);

// The four unoriented-equivalence representatives
// {(q,k), (q,p-k), (q',kq'), (q',p-kq')} with q' = q^{-1} mod p, duplicates
// removed, sorted. Throws NotPrimitive when gcd(k,p) != 1.
std::vector<SimpleKnot> equivalent_parameter_set(const SimpleKnot& K);

// Lexicographically smallest (q,k) in equivalent_parameter_set(K).
SimpleKnot canonical_form(const SimpleKnot& K);

// Integer surgeries on K: the coefficients are exactly the m ≡ -a (mod p).
// K_m has |H1| = |m|; homology spheres are the admissible m in {+1,-1}.
struct SurgeryDescriptor {
  std::int64_t a = 0;                     // self-linking numerator
  std::vector<std::int64_t> coefficients; // admissible m inside the window
};

// All m in [window_lo, window_hi] with m ≡ -a (mod p). Throws NotPrimitive.
SurgeryDescriptor surgery_descriptor(const SimpleKnot& K, std::int64_t window_lo,
                                     std::int64_t window_hi);

}  // namespace sk

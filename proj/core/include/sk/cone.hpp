#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sk/knot.hpp"

namespace sk {

// Positions of the HFK Z-summands of a simple knot: for each residue class
// c mod p there is a unique n_c ≡ c (mod p) carrying the Z summand.
//
// This model hard-assumes HFK ≅ Z^p (one generator per Spin^c structure,
// no differentials), which holds for every simple knot but NOT for general
// knots. All rank computations below are only valid under that assumption.
struct SpincProfile {
  std::int64_t p = 0;
  std::vector<std::int64_t> n;  // n[c] ≡ c (mod p)
  // For odd p the n_c are the symmetric-normalized gradings; for even p
  // those are half-integers, so the raw f-values are used instead. Ranks
  // are invariant under the uniform shift between the two.
  bool symmetric_normalized = false;
};

// Throws NotPrimitive.
SpincProfile spinc_profile(const SimpleKnot& K);

// One connected interval of the mapping-cone diagram between consecutive
// +/- labels: [-,+] and [+,-] contribute 1 to the homology rank,
// [-,-] and [+,+] contribute 0.
struct ConeSummand {
  std::int64_t start_n = 0;
  std::int64_t end_n = 0;
  char start_label = '-';
  char end_label = '+';
  int rank = 0;
};

// Label walk for one Spin^c structure of the surgered manifold K_m.
struct ConeClass {
  std::int64_t spinc = 0;     // class index in [0, |m|)
  std::string labels;         // '-', 'o', '+' along the walk n = spinc + t*m
  std::vector<ConeSummand> summands;
  std::int64_t rank = 0;
};

struct ConeDiagram {
  std::int64_t m = 0;
  bool mirrored = false;      // negative m computed on the mirror (gradings negated)
  std::int64_t window_lo = 0; // walked n-interval (in mirror coordinates if mirrored)
  std::int64_t window_hi = 0;
  std::vector<ConeClass> classes;
  std::int64_t total_rank = 0;
};

// Full diagram of C(K,m). Throws NotPrimitive; InvalidCoefficient when
// m = 0 or m is not ≡ -self_linking(K) (mod p).
ConeDiagram cone_diagram(const SimpleKnot& K, std::int64_t m);

// rank of H(C(K,m)) via the interval decomposition; same errors.
std::int64_t surgery_rank(const SimpleKnot& K, std::int64_t m);

// True iff surgery_rank(K,m) = |m| = |H1(K_m)|.
bool is_lspace_surgery(const SimpleKnot& K, std::int64_t m);

}  // namespace sk

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sk {

enum class FamilyTag {
  BergeI_II,   // p ≡ ik ± 1 (k²), gcd(i,k) ∈ {1,2}
  BergeIII,    // p ≡ ±(2k∓1)d (k²) with the divisor/parity side conditions
  BergeIV,
  BergeV,
  BergeVII,    // k² ± k + 1 ≡ 0 (p)
  BergeVIII,   // k² ± k - 1 ≡ 0 (p)
  BergeIX,     // p = 22j²+9j+1, k = 11j+2
  BergeX,      // p = 22j²+13j+2, k = 11j+3
  Tange,       // one of the quadratic rows of tange_table()
  TangeSporadic,  // K(191,34,15)
};

std::string family_tag_name(FamilyTag tag);
// Parses "berge-i-ii", "berge-vii", "tange-4", "tange-sporadic", ...
// Returns (tag, row) where row is 0 except for tange-N.
std::optional<std::pair<FamilyTag, int>> parse_family_tag(const std::string& name);

// A quadratic family p = p2 j² + p1 j + p0, k = k1 j + k0, whose members
// satisfy Q(k) = q2 k² + q1 k + q0 ≡ 0 (mod p).
struct TangeRow {
  std::int64_t p2, p1, p0;
  std::int64_t k1, k0;
  std::int64_t q2, q1, q0;
};

// The 19 quadratic Tange families, in the table's reading order.
const std::array<TangeRow, 19>& tange_table();

inline constexpr std::int64_t kSporadicTangeP = 191;
inline constexpr std::int64_t kSporadicTangeK = 15;

struct FamilyOptions {
  // The quadratic families of tange_table() are searched over all integer j
  // by default; set false to restrict to j >= 0.
  bool tange_negative_j = true;
};

// Witness for a family membership. `representative` records which of
// {k, p-k, k^{-1}, p-k^{-1}} satisfied the defining relation.
struct FamilyMatch {
  FamilyTag tag = FamilyTag::BergeI_II;
  std::int64_t representative = 0;
  int tange_row = 0;  // 1-based row of tange_table() when tag == Tange
  int sign = 0;       // the ± of the defining congruence (types I-V, VII, VIII)
  int branch = 0;     // sub-branch for types III-V (0: first displayed line, 1: second)
  std::int64_t i = -1;  // type I/II residue, reduced mod representative
  std::int64_t d = 0;   // divisor witness for types III-V
  std::int64_t j = 0;   // parameter for IX, X and Tange rows
};

// Re-evaluates the defining congruence of `m` against (p, m.representative).
bool verify_witness(std::int64_t p, const FamilyMatch& m);

// All Berge matches over the four representatives of k.
// Throws InvalidInput unless p >= 2, k ≢ 0 and gcd(k,p) = 1.
std::vector<FamilyMatch> berge_match(std::int64_t p, std::int64_t k);

// All Tange matches (table rows and the sporadic knot); same preconditions.
std::vector<FamilyMatch> tange_match(std::int64_t p, std::int64_t k,
                                     const FamilyOptions& opts = {});

// Allocation-light membership test used by the sweep hot path.
bool is_family_member(std::int64_t p, std::int64_t k, const FamilyOptions& opts = {});

// All (p,k) with p <= max_p generated by the family's parameterization,
// k reduced mod p, gcd(k,p) = 1, deduplicated and sorted. `tange_row` is
// required exactly when tag == Tange. max_p < 2 yields an empty list.
std::vector<std::pair<std::int64_t, std::int64_t>> enumerate_family(
    FamilyTag tag, int tange_row, std::int64_t max_p, const FamilyOptions& opts = {});

// Combined verdict for the pair (p,k) with q = k² mod p.
struct ClassifyReport {
  std::int64_t p = 0, k = 0, q = 0;
  std::vector<FamilyMatch> matches;
  std::int64_t width = 0;
  std::int64_t genus = 0;
  bool lspace = false;  // width < 2p
  bool agree = false;   // lspace <=> some family matched
};

ClassifyReport classify(std::int64_t p, std::int64_t k, const FamilyOptions& opts = {});

// Machine-readable export of the tables (coefficients only).
std::string family_tables_json();

}  // namespace sk

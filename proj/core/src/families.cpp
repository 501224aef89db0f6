#include "sk/families.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "sk/arith.hpp"
#include "sk/errors.hpp"
#include "sk/floer.hpp"
#include "sk/knot.hpp"

namespace sk {

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::BergeI_II: return "berge-i-ii";
    case FamilyTag::BergeIII: return "berge-iii";
    case FamilyTag::BergeIV: return "berge-iv";
    case FamilyTag::BergeV: return "berge-v";
    case FamilyTag::BergeVII: return "berge-vii";
    case FamilyTag::BergeVIII: return "berge-viii";
    case FamilyTag::BergeIX: return "berge-ix";
    case FamilyTag::BergeX: return "berge-x";
    case FamilyTag::Tange: return "tange";
    case FamilyTag::TangeSporadic: return "tange-sporadic";
  }
  return "?";
}

std::optional<std::pair<FamilyTag, int>> parse_family_tag(const std::string& name) {
  static const std::pair<const char*, FamilyTag> plain[] = {
      {"berge-i-ii", FamilyTag::BergeI_II}, {"berge-i", FamilyTag::BergeI_II},
      {"berge-ii", FamilyTag::BergeI_II},   {"berge-iii", FamilyTag::BergeIII},
      {"berge-iv", FamilyTag::BergeIV},     {"berge-v", FamilyTag::BergeV},
      {"berge-vii", FamilyTag::BergeVII},   {"berge-viii", FamilyTag::BergeVIII},
      {"berge-ix", FamilyTag::BergeIX},     {"berge-x", FamilyTag::BergeX},
      {"tange-sporadic", FamilyTag::TangeSporadic},
  };
  for (const auto& [n, t] : plain)
    if (name == n) return std::make_pair(t, 0);
  if (name.rfind("tange-", 0) == 0) {
    const std::string suffix = name.substr(6);
    if (!suffix.empty() && suffix.find_first_not_of("0123456789") == std::string::npos) {
      const int row = std::stoi(suffix);
      if (row >= 1 && row <= static_cast<int>(tange_table().size()))
        return std::make_pair(FamilyTag::Tange, row);
    }
  }
  return std::nullopt;
}

const std::array<TangeRow, 19>& tange_table() {
  // Reading order of the table; three entries repaired where the printed
  // Q or p is inconsistent with the (p(j), k(j)) parameterization.
  static const std::array<TangeRow, 19> rows = {{
      {14, 7, 1, 7, 2, 2, -1, 1},
      {20, 15, 3, 5, 2, 4, -1, 1},
      {30, 9, 1, 6, 1, 5, -1, 2},
      {42, 23, 3, 7, 2, 6, -1, -1},
      {42, 47, 13, 7, 4, 6, -1, -1},
      {52, 15, 1, 13, 2, 4, -1, -1},
      {52, 63, 19, 13, 8, 4, -1, -1},
      {54, 15, 1, 27, 4, 2, -1, -1},
      {54, 39, 7, 27, 10, 2, -1, -1},
      {69, 17, 1, 23, 3, 3, -1, -1},
      {69, 29, 3, 23, 5, 3, -1, -1},
      {85, 19, 1, 17, 2, 5, -1, -1},
      {85, 49, 7, 17, 5, 5, -1, -1},
      {99, 35, 3, 11, 2, 9, -1, -1},
      {99, 53, 7, 11, 3, 9, -1, -1},
      {120, 16, 1, 12, 1, 5, -2, 3},
      {120, 104, 22, 12, 5, 5, 2, -3},
      {120, 20, 1, 20, 2, 3, -2, 2},
      {120, 36, 3, 12, 2, 5, -2, 2},
  }};
  return rows;
}

namespace {

void require_pk(std::int64_t p, std::int64_t k) {
  if (p < 2) throw InvalidInput("p must be at least 2, got " + std::to_string(p));
  if (k <= 0 || k >= p)
    throw InvalidInput("k must lie in [1, p-1], got k = " + std::to_string(k));
  if (gcd_ll(k, p) != 1)
    throw InvalidInput("gcd(k,p) must be 1, got gcd(" + std::to_string(k) + "," +
                       std::to_string(p) + ") = " + std::to_string(gcd_ll(k, p)));
}

// {k, p-k, k^{-1}, p-k^{-1}} with duplicates removed, order preserved.
std::vector<std::int64_t> representatives(std::int64_t p, std::int64_t k) {
  const std::int64_t ki = mod_inverse(k, p);
  std::vector<std::int64_t> reps = {k, p - k, ki, p - ki};
  std::vector<std::int64_t> out;
  for (std::int64_t r : reps)
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  return out;
}

std::int64_t mod_k2(__int128 x, std::int64_t k2) {
  std::int64_t r = static_cast<std::int64_t>(x % k2);
  return r < 0 ? r + k2 : r;
}

// ---- per-type matchers; k is one fixed representative ----

template <typename Sink>
void match_I_II(std::int64_t p, std::int64_t k, Sink&& sink) {
  const std::int64_t k2 = k * k;
  const std::int64_t r = p % k2;
  for (int s : {1, -1}) {
    const std::int64_t c = mod_k2(static_cast<__int128>(r) - s, k2);
    if (c % k != 0) continue;
    const std::int64_t i = (c / k) % k;
    const std::int64_t g = gcd_ll(i, k);
    if (g == 1 || g == 2) {
      FamilyMatch m;
      m.tag = FamilyTag::BergeI_II;
      m.representative = k;
      m.sign = s;
      m.i = i;
      if (!sink(m)) return;
    }
  }
}

struct DivisorRule {
  FamilyTag tag;
  int branch;
  std::int64_t multiplier;      // the (2k∓1) or (k±1) factor
  std::int64_t divisor_source;  // d runs over divisors of this
  bool quotient_odd;            // require source/d odd
  bool d_odd;                   // require d odd
};

std::array<DivisorRule, 6> divisor_rules(std::int64_t k) {
  return {{
      {FamilyTag::BergeIII, 0, 2 * k - 1, k + 1, true, false},
      {FamilyTag::BergeIII, 1, 2 * k + 1, k - 1, true, false},
      {FamilyTag::BergeIV, 0, k - 1, 2 * k + 1, false, false},
      {FamilyTag::BergeIV, 1, k + 1, 2 * k - 1, false, false},
      {FamilyTag::BergeV, 0, k + 1, k + 1, false, true},
      {FamilyTag::BergeV, 1, k - 1, k - 1, false, true},
  }};
}

template <typename Sink>
void match_III_V(std::int64_t p, std::int64_t k, Sink&& sink) {
  const std::int64_t k2 = k * k;
  const std::int64_t r = p % k2;
  for (const DivisorRule& rule : divisor_rules(k)) {
    if (rule.divisor_source <= 0) continue;  // k = 1 degenerates the k-1 branches
    auto consider = [&](std::int64_t dv) {
      if (rule.quotient_odd && (rule.divisor_source / dv) % 2 == 0) return true;
      if (rule.d_odd && dv % 2 == 0) return true;
      for (int s : {1, -1}) {
        if (mod_k2(static_cast<__int128>(s) * rule.multiplier * dv, k2) != r) continue;
        FamilyMatch m;
        m.tag = rule.tag;
        m.representative = k;
        m.sign = s;
        m.branch = rule.branch;
        m.d = dv;
        if (!sink(m)) return false;
      }
      return true;
    };
    for (std::int64_t d = 1; d * d <= rule.divisor_source; ++d) {
      if (rule.divisor_source % d != 0) continue;
      if (!consider(d)) return;
      const std::int64_t cofactor = rule.divisor_source / d;
      if (cofactor != d && !consider(cofactor)) return;
    }
  }
}

template <typename Sink>
void match_VII_VIII(std::int64_t p, std::int64_t k, Sink&& sink) {
  for (int s : {1, -1}) {
    for (int c : {1, -1}) {
      const __int128 v = static_cast<__int128>(k) * k + static_cast<__int128>(s) * k + c;
      if (static_cast<std::int64_t>(((v % p) + p) % p) != 0) continue;
      FamilyMatch m;
      m.tag = (c == 1) ? FamilyTag::BergeVII : FamilyTag::BergeVIII;
      m.representative = k;
      m.sign = s;
      if (!sink(m)) return;
    }
  }
}

std::int64_t isqrt_ll(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// integer roots of a j^2 + b j + c = 0 (a > 0)
void quad_solve(std::int64_t a, std::int64_t b, std::int64_t c,
                std::int64_t out[2], int& count) {
  count = 0;
  const std::int64_t disc = b * b - 4 * a * c;
  if (disc < 0) return;
  const std::int64_t s = isqrt_ll(disc);
  if (s * s != disc) return;
  for (std::int64_t num : {-b + s, -b - s}) {
    if (num % (2 * a) != 0) continue;
    const std::int64_t j = num / (2 * a);
    bool dup = false;
    for (int i = 0; i < count; ++i) dup |= (out[i] == j);
    if (!dup) out[count++] = j;
  }
}

struct QuadFamily {
  std::int64_t p2, p1, p0, k1, k0;
};

template <typename Sink>
void match_quadratic(std::int64_t p, std::int64_t k, const QuadFamily& f, bool negative_j,
                     FamilyTag tag, int row, Sink&& sink) {
  std::int64_t roots[2];
  int count = 0;
  quad_solve(f.p2, f.p1, f.p0 - p, roots, count);
  for (int idx = 0; idx < count; ++idx) {
    const std::int64_t j = roots[idx];
    if (!negative_j && j < 0) continue;
    if (normalized_residue(f.k1 * j + f.k0, p) != k) continue;
    FamilyMatch m;
    m.tag = tag;
    m.representative = k;
    m.tange_row = row;
    m.j = j;
    if (!sink(m)) return;
  }
}

constexpr QuadFamily kBergeIX{22, 9, 1, 11, 2};
constexpr QuadFamily kBergeX{22, 13, 2, 11, 3};

template <typename Sink>
void match_all(std::int64_t p, std::int64_t k, const FamilyOptions& opts, bool berge,
               bool tange, Sink&& raw_sink) {
  bool alive = true;
  auto sink = [&](const FamilyMatch& m) { return alive = raw_sink(m); };
  for (std::int64_t rep : representatives(p, k)) {
    if (berge) {
      match_I_II(p, rep, sink);
      if (!alive) return;
      match_III_V(p, rep, sink);
      if (!alive) return;
      match_VII_VIII(p, rep, sink);
      if (!alive) return;
      match_quadratic(p, rep, kBergeIX, true, FamilyTag::BergeIX, 0, sink);
      if (!alive) return;
      match_quadratic(p, rep, kBergeX, true, FamilyTag::BergeX, 0, sink);
      if (!alive) return;
    }
    if (tange) {
      const auto& table = tange_table();
      for (std::size_t r = 0; r < table.size(); ++r) {
        const TangeRow& row = table[r];
        match_quadratic(p, rep, {row.p2, row.p1, row.p0, row.k1, row.k0},
                        opts.tange_negative_j, FamilyTag::Tange, static_cast<int>(r + 1), sink);
        if (!alive) return;
      }
      if (p == kSporadicTangeP && rep == kSporadicTangeK) {
        FamilyMatch m;
        m.tag = FamilyTag::TangeSporadic;
        m.representative = rep;
        if (!sink(m)) return;
      }
    }
  }
}

}  // namespace

std::vector<FamilyMatch> berge_match(std::int64_t p, std::int64_t k) {
  require_pk(p, k);
  std::vector<FamilyMatch> out;
  match_all(p, k, {}, true, false, [&out](const FamilyMatch& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<FamilyMatch> tange_match(std::int64_t p, std::int64_t k, const FamilyOptions& opts) {
  require_pk(p, k);
  std::vector<FamilyMatch> out;
  match_all(p, k, opts, false, true, [&out](const FamilyMatch& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool is_family_member(std::int64_t p, std::int64_t k, const FamilyOptions& opts) {
  require_pk(p, k);
  bool found = false;
  match_all(p, k, opts, true, true, [&found](const FamilyMatch&) {
    found = true;
    return false;  // stop at the first witness
  });
  return found;
}

bool verify_witness(std::int64_t p, const FamilyMatch& m) {
  const std::int64_t k = m.representative;
  if (p < 2 || k < 1 || k >= p) return false;
  const std::int64_t k2 = k * k;
  switch (m.tag) {
    case FamilyTag::BergeI_II: {
      if (m.i < 0 || gcd_ll(m.i, k) > 2) return false;
      return mod_k2(static_cast<__int128>(m.i) * k + m.sign, k2) == p % k2;
    }
    case FamilyTag::BergeIII:
    case FamilyTag::BergeIV:
    case FamilyTag::BergeV: {
      for (const DivisorRule& rule : divisor_rules(k)) {
        if (rule.tag != m.tag || rule.branch != m.branch) continue;
        if (rule.divisor_source <= 0 || m.d <= 0) return false;
        if (rule.divisor_source % m.d != 0) return false;
        if (rule.quotient_odd && (rule.divisor_source / m.d) % 2 == 0) return false;
        if (rule.d_odd && m.d % 2 == 0) return false;
        return mod_k2(static_cast<__int128>(m.sign) * rule.multiplier * m.d, k2) == p % k2;
      }
      return false;
    }
    case FamilyTag::BergeVII:
    case FamilyTag::BergeVIII: {
      const int c = (m.tag == FamilyTag::BergeVII) ? 1 : -1;
      const __int128 v = static_cast<__int128>(k) * k + static_cast<__int128>(m.sign) * k + c;
      return static_cast<std::int64_t>(((v % p) + p) % p) == 0;
    }
    case FamilyTag::BergeIX:
      return 22 * m.j * m.j + 9 * m.j + 1 == p && normalized_residue(11 * m.j + 2, p) == k;
    case FamilyTag::BergeX:
      return 22 * m.j * m.j + 13 * m.j + 2 == p && normalized_residue(11 * m.j + 3, p) == k;
    case FamilyTag::Tange: {
      if (m.tange_row < 1 || m.tange_row > static_cast<int>(tange_table().size())) return false;
      const TangeRow& row = tange_table()[static_cast<std::size_t>(m.tange_row - 1)];
      return row.p2 * m.j * m.j + row.p1 * m.j + row.p0 == p &&
             normalized_residue(row.k1 * m.j + row.k0, p) == k;
    }
    case FamilyTag::TangeSporadic:
      return p == kSporadicTangeP && k == kSporadicTangeK;
  }
  return false;
}

namespace {

void emit_pair(std::vector<std::pair<std::int64_t, std::int64_t>>& out, std::int64_t p,
               std::int64_t k, std::int64_t max_p) {
  if (p < 2 || p > max_p) return;
  const std::int64_t kr = normalized_residue(k, p);
  if (kr == 0 || gcd_ll(kr, p) != 1) return;
  out.push_back({p, kr});
}

void enumerate_residue_class(std::vector<std::pair<std::int64_t, std::int64_t>>& out,
                             std::int64_t k, std::int64_t k2, std::int64_t c,
                             std::int64_t max_p) {
  // all p ≡ c (mod k²) with k+1 <= p <= max_p
  std::int64_t p = c == 0 ? k2 : c;
  for (; p <= max_p; p += k2)
    if (p > k) emit_pair(out, p, k, max_p);
}

void enumerate_quadratic(std::vector<std::pair<std::int64_t, std::int64_t>>& out,
                         const QuadFamily& f, std::int64_t max_p, bool negative_j) {
  const std::int64_t jmax = isqrt_ll(max_p / f.p2) + 2;
  for (std::int64_t j = negative_j ? -jmax : 0; j <= jmax; ++j) {
    const std::int64_t p = f.p2 * j * j + f.p1 * j + f.p0;
    if (p < 2 || p > max_p) continue;
    emit_pair(out, p, f.k1 * j + f.k0, max_p);
  }
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> enumerate_family(
    FamilyTag tag, int tange_row, std::int64_t max_p, const FamilyOptions& opts) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (max_p < 2) return out;
  switch (tag) {
    case FamilyTag::BergeI_II:
      for (std::int64_t k = 1; k < max_p; ++k) {
        const std::int64_t k2 = k * k;
        for (std::int64_t i = 0; i < k; ++i) {
          const std::int64_t g = gcd_ll(i, k);
          if (g != 1 && g != 2) continue;
          for (int s : {1, -1})
            enumerate_residue_class(out, k, k2, mod_k2(static_cast<__int128>(i) * k + s, k2),
                                    max_p);
        }
      }
      break;
    case FamilyTag::BergeIII:
    case FamilyTag::BergeIV:
    case FamilyTag::BergeV:
      for (std::int64_t k = 1; k < max_p; ++k) {
        const std::int64_t k2 = k * k;
        for (const DivisorRule& rule : divisor_rules(k)) {
          if (rule.tag != tag || rule.divisor_source <= 0) continue;
          for (std::int64_t d = 1; d <= rule.divisor_source; ++d) {
            if (rule.divisor_source % d != 0) continue;
            if (rule.quotient_odd && (rule.divisor_source / d) % 2 == 0) continue;
            if (rule.d_odd && d % 2 == 0) continue;
            for (int s : {1, -1})
              enumerate_residue_class(
                  out, k, k2, mod_k2(static_cast<__int128>(s) * rule.multiplier * d, k2), max_p);
          }
        }
      }
      break;
    case FamilyTag::BergeVII:
    case FamilyTag::BergeVIII: {
      const int c = (tag == FamilyTag::BergeVII) ? 1 : -1;
      for (std::int64_t p = 2; p <= max_p; ++p)
        for (std::int64_t k = 1; k < p; ++k)
          for (int s : {1, -1})
            if (normalized_residue(k * k + s * k + c, p) == 0) emit_pair(out, p, k, max_p);
      break;
    }
    case FamilyTag::BergeIX:
      enumerate_quadratic(out, kBergeIX, max_p, true);
      break;
    case FamilyTag::BergeX:
      enumerate_quadratic(out, kBergeX, max_p, true);
      break;
    case FamilyTag::Tange: {
      if (tange_row < 1 || tange_row > static_cast<int>(tange_table().size()))
        throw InvalidInput("tange row must be in [1," +
                           std::to_string(tange_table().size()) + "]");
      const TangeRow& row = tange_table()[static_cast<std::size_t>(tange_row - 1)];
      enumerate_quadratic(out, {row.p2, row.p1, row.p0, row.k1, row.k0}, max_p,
                          opts.tange_negative_j);
      break;
    }
    case FamilyTag::TangeSporadic:
      if (kSporadicTangeP <= max_p) out.push_back({kSporadicTangeP, kSporadicTangeK});
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassifyReport classify(std::int64_t p, std::int64_t k, const FamilyOptions& opts) {
  require_pk(p, k);
  ClassifyReport r;
  r.p = p;
  r.k = k;
  r.q = mul_mod(k, k, p);
  r.matches = berge_match(p, k);
  auto tange = tange_match(p, k, opts);
  r.matches.insert(r.matches.end(), tange.begin(), tange.end());
  r.width = width(p, r.q, k);
  r.genus = (r.width - p + 1) / 2;
  r.lspace = r.width < 2 * p;
  r.agree = r.lspace == !r.matches.empty();
  return r;
}

std::string family_tables_json() {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["berge"]["i-ii"] = {{"relation", "p = i*k + s (mod k^2)"},
                        {"sign_choices", {1, -1}},
                        {"gcd_i_k", {1, 2}}};
  j["berge"]["iii"] = {
      {"branches",
       {{{"relation", "p = s*(2k-1)*d (mod k^2)"}, {"d_divides", "k+1"}, {"quotient_odd", true}},
        {{"relation", "p = s*(2k+1)*d (mod k^2)"},
         {"d_divides", "k-1"},
         {"quotient_odd", true}}}}};
  j["berge"]["iv"] = {
      {"branches",
       {{{"relation", "p = s*(k-1)*d (mod k^2)"}, {"d_divides", "2k+1"}},
        {{"relation", "p = s*(k+1)*d (mod k^2)"}, {"d_divides", "2k-1"}}}}};
  j["berge"]["v"] = {
      {"branches",
       {{{"relation", "p = s*(k+1)*d (mod k^2)"}, {"d_divides", "k+1"}, {"d_odd", true}},
        {{"relation", "p = s*(k-1)*d (mod k^2)"}, {"d_divides", "k-1"}, {"d_odd", true}}}}};
  j["berge"]["vii"] = {{"relation", "k^2 + s*k + 1 = 0 (mod p)"}};
  j["berge"]["viii"] = {{"relation", "k^2 + s*k - 1 = 0 (mod p)"}};
  j["berge"]["ix"] = {{"p", {22, 9, 1}}, {"k", {11, 2}}};
  j["berge"]["x"] = {{"p", {22, 13, 2}}, {"k", {11, 3}}};
  nlohmann::json rows = nlohmann::json::array();
  int idx = 1;
  for (const TangeRow& r : tange_table()) {
    rows.push_back({{"row", idx++},
                    {"p", {r.p2, r.p1, r.p0}},
                    {"k", {r.k1, r.k0}},
                    {"q", {r.q2, r.q1, r.q0}}});
  }
  j["tange"]["rows"] = rows;
  j["tange"]["sporadic"] = {{"p", kSporadicTangeP}, {"k", kSporadicTangeK}};
  return j.dump(2);
}

}  // namespace sk

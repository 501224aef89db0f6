#include "sk/cone.hpp"

#include <algorithm>
#include <string>

#include "sk/errors.hpp"
#include "sk/floer.hpp"

namespace sk {

SpincProfile spinc_profile(const SimpleKnot& K) {
  if (!is_primitive(K))
    throw NotPrimitive("spinc_profile: K(" + std::to_string(K.p) + "," + std::to_string(K.q) +
                       "," + std::to_string(K.k) + ") is not primitive");
  const GradingProfile gp = f_profile(K);
  const auto [mn, mx] = std::minmax_element(gp.f.begin(), gp.f.end());
  const std::int64_t sum = *mx + *mn;
  // symmetric normalization keeps integer values only when max+min is even
  const std::int64_t shift = (sum % 2 == 0) ? sum / 2 : 0;
  SpincProfile out;
  out.p = K.p;
  out.symmetric_normalized = (sum % 2 == 0);
  out.n.resize(static_cast<std::size_t>(K.p));
  for (std::int64_t v : gp.f) {
    const std::int64_t nv = v - shift;
    out.n[static_cast<std::size_t>(normalized_residue(nv, K.p))] = nv;
  }
  return out;
}

namespace {

struct WalkSetup {
  std::vector<std::int64_t> n;  // spinc positions, possibly mirrored
  std::int64_t m = 0;           // positive coefficient
  std::int64_t lo = 0, hi = 0;  // walk window
  bool mirrored = false;
};

WalkSetup prepare_walk(const SimpleKnot& K, std::int64_t m) {
  if (m == 0) throw InvalidCoefficient("surgery coefficient m must be nonzero");
  const std::int64_t a = self_linking(K);
  if (normalized_residue(m + a, K.p) != 0)
    throw InvalidCoefficient("m = " + std::to_string(m) + " is not ≡ -" + std::to_string(a) +
                             " (mod " + std::to_string(K.p) + ")");
  WalkSetup w;
  w.n = spinc_profile(K).n;
  w.m = m;
  if (m < 0) {
    // mirror reduction: HFK gradings negate, coefficient flips sign
    w.mirrored = true;
    w.m = -m;
    std::vector<std::int64_t> neg(w.n.size());
    for (std::size_t c = 0; c < w.n.size(); ++c) {
      const std::int64_t v = -w.n[c];
      neg[static_cast<std::size_t>(normalized_residue(v, K.p))] = v;
    }
    w.n = std::move(neg);
  }
  const auto [mn, mx] = std::minmax_element(w.n.begin(), w.n.end());
  w.lo = *mn - 2 * w.m;
  w.hi = *mx + 2 * w.m;
  return w;
}

inline char label_at(const WalkSetup& w, std::int64_t p, std::int64_t n) {
  const std::int64_t nc = w.n[static_cast<std::size_t>(normalized_residue(n, p))];
  if (n == nc) return 'o';
  return n > nc ? '+' : '-';
}

}  // namespace

ConeDiagram cone_diagram(const SimpleKnot& K, std::int64_t m) {
  const WalkSetup w = prepare_walk(K, m);
  ConeDiagram out;
  out.m = m;
  out.mirrored = w.mirrored;
  out.window_lo = w.lo;
  out.window_hi = w.hi;
  out.classes.reserve(static_cast<std::size_t>(w.m));
  for (std::int64_t c = 0; c < w.m; ++c) {
    ConeClass cls;
    cls.spinc = c;
    std::int64_t n = w.lo + normalized_residue(c - w.lo, w.m);
    std::int64_t prev_sign_n = 0;
    char prev_sign = 0;
    for (; n <= w.hi; n += w.m) {
      const char l = label_at(w, K.p, n);
      cls.labels += l;
      if (l == 'o') continue;
      if (prev_sign != 0) {
        ConeSummand s;
        s.start_n = prev_sign_n;
        s.end_n = n;
        s.start_label = prev_sign;
        s.end_label = l;
        s.rank = (prev_sign != l) ? 1 : 0;
        cls.rank += s.rank;
        cls.summands.push_back(s);
      }
      prev_sign = l;
      prev_sign_n = n;
    }
    out.total_rank += cls.rank;
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::int64_t surgery_rank(const SimpleKnot& K, std::int64_t m) {
  const WalkSetup w = prepare_walk(K, m);
  std::int64_t total = 0;
  for (std::int64_t c = 0; c < w.m; ++c) {
    char prev_sign = 0;
    std::int64_t n = w.lo + normalized_residue(c - w.lo, w.m);
    for (; n <= w.hi; n += w.m) {
      const char l = label_at(w, K.p, n);
      if (l == 'o') continue;
      if (prev_sign != 0 && prev_sign != l) ++total;
      prev_sign = l;
    }
  }
  return total;
}

bool is_lspace_surgery(const SimpleKnot& K, std::int64_t m) {
  return surgery_rank(K, m) == (m < 0 ? -m : m);
}

}  // namespace sk

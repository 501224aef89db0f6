#include "sk/knot.hpp"

#include <algorithm>
#include <string>

namespace sk {

SimpleKnot validate(std::int64_t p, std::int64_t q, std::int64_t k) {
  if (p < 2) throw InvalidLensSpace("p must be at least 2, got " + std::to_string(p));
  if (p > modulus_budget())
    throw ResourceLimit("p = " + std::to_string(p) + " exceeds the arithmetic word budget " +
                        std::to_string(modulus_budget()));
  const std::int64_t qr = normalized_residue(q, p);
  const std::int64_t kr = normalized_residue(k, p);
  if (gcd_ll(qr, p) != 1)
    throw InvalidLensSpace("gcd(q,p) must be 1 for L(p,q): gcd(" + std::to_string(qr) + "," +
                           std::to_string(p) + ") != 1");
  if (kr == 0)
    throw InvalidKnot("k ≡ 0 (mod p): the knot needs two distinct basepoints");
  return SimpleKnot{p, qr, kr};
}

std::int64_t homology_class(const SimpleKnot& K) { return K.k; }

bool is_primitive(const SimpleKnot& K) { return gcd_ll(K.k, K.p) == 1; }

namespace {

void require_primitive(const SimpleKnot& K) {
  if (!is_primitive(K))
    throw NotPrimitive("K(" + std::to_string(K.p) + "," + std::to_string(K.q) + "," +
                       std::to_string(K.k) + ") is not primitive: gcd(k,p) = " +
                       std::to_string(gcd_ll(K.k, K.p)));
}

}  // namespace

std::int64_t self_linking(const SimpleKnot& K) {
  require_primitive(K);
  const std::int64_t qp = mod_inverse(K.q, K.p);
  return mul_mod(mul_mod(K.k, K.k, K.p), qp, K.p);
}

bool has_integer_zhs_surgery(const SimpleKnot& K) {
  const std::int64_t k2 = mul_mod(K.k, K.k, K.p);
  return k2 == K.q || k2 == normalized_residue(-K.q, K.p);
}

std::vector<SimpleKnot> equivalent_parameter_set(const SimpleKnot& K) {
  require_primitive(K);
  const std::int64_t qp = mod_inverse(K.q, K.p);
  const std::int64_t kq = mul_mod(K.k, qp, K.p);
  std::vector<SimpleKnot> out = {
      {K.p, K.q, K.k},
      {K.p, K.q, K.p - K.k},
      {K.p, qp, kq},
      {K.p, qp, K.p - kq},
  };
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimpleKnot canonical_form(const SimpleKnot& K) {
  return equivalent_parameter_set(K).front();
}

SurgeryDescriptor surgery_descriptor(const SimpleKnot& K, std::int64_t window_lo,
                                     std::int64_t window_hi) {
  SurgeryDescriptor out;
  out.a = self_linking(K);
  const std::int64_t target = normalized_residue(-out.a, K.p);
  if (window_lo <= window_hi) {
    // first m >= window_lo with m ≡ target (p)
    std::int64_t m = window_lo + normalized_residue(target - window_lo, K.p);
    for (; m <= window_hi; m += K.p) out.coefficients.push_back(m);
  }
  return out;
}

}  // namespace sk

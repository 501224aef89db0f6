#include "sk/floer.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "sk/errors.hpp"

namespace sk {

GradingProfile f_profile(const SimpleKnot& K) {
  GradingProfile out;
  out.f.resize(static_cast<std::size_t>(K.p));
  std::int64_t fi = 0, r = 0, mx = 0, mn = 0;
  for (std::int64_t i = 0; i < K.p; ++i) {
    out.f[static_cast<std::size_t>(i)] = fi;
    fi += (r >= 1 && r <= K.k) ? K.k - K.p : K.k;
    r += K.q;
    if (r >= K.p) r -= K.p;
    if (i + 1 < K.p) {
      mx = std::max(mx, fi);
      mn = std::min(mn, fi);
    }
  }
  out.width = mx - mn;
  out.doubled_gradings.resize(out.f.size());
  const std::int64_t shift = mx + mn;
  std::transform(out.f.begin(), out.f.end(), out.doubled_gradings.begin(),
                 [shift](std::int64_t v) { return 2 * v - shift; });
  std::sort(out.doubled_gradings.begin(), out.doubled_gradings.end(), std::greater<>());
  if (is_primitive(K)) out.genus = (out.width - K.p + 1) / 2;
  return out;
}

std::int64_t width_kernel(std::int64_t p, std::int64_t q, std::int64_t k) noexcept {
  std::int64_t fi = 0, r = 0, mx = 0, mn = 0;
  const std::int64_t drop = k - p;
  for (std::int64_t i = 0; i < p; ++i) {
    fi += (r >= 1 && r <= k) ? drop : k;
    r += q;
    if (r >= p) r -= p;
    if (fi > mx)
      mx = fi;
    else if (fi < mn)
      mn = fi;
  }
  return mx - mn;
}

std::int64_t width(std::int64_t p, std::int64_t q, std::int64_t k) {
  const SimpleKnot K = validate(p, q, k);
  return width_kernel(K.p, K.q, K.k);
}

LaurentPolynomial euler_characteristic(const SimpleKnot& K) {
  return euler_characteristic(K, f_profile(K));
}

LaurentPolynomial euler_characteristic(const SimpleKnot&, const GradingProfile& gp) {
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(gp.doubled_gradings.size());
  for (std::int64_t g : gp.doubled_gradings) terms.push_back({g, 1});
  return LaurentPolynomial::from_terms(std::move(terms));
}

LaurentPolynomial alexander_polynomial(const SimpleKnot& K) {
  if (!is_primitive(K))
    throw NotPrimitive("alexander_polynomial: K(" + std::to_string(K.p) + "," +
                       std::to_string(K.q) + "," + std::to_string(K.k) + ") is not primitive");
  return alexander_polynomial(K, f_profile(K));
}

LaurentPolynomial alexander_polynomial(const SimpleKnot& K, const GradingProfile& gp) {
  if (!is_primitive(K))
    throw NotPrimitive("alexander_polynomial: K(" + std::to_string(K.p) + "," +
                       std::to_string(K.q) + "," + std::to_string(K.k) + ") is not primitive");
  const std::int64_t lo = *std::min_element(gp.f.begin(), gp.f.end());
  const std::int64_t w = gp.width;

  // numerator (t-1) * sum_i t^{f(i)-lo}, dense over exponents [0, w+1]
  std::vector<std::int64_t> num(static_cast<std::size_t>(w) + 2, 0);
  for (std::int64_t v : gp.f) {
    num[static_cast<std::size_t>(v - lo + 1)] += 1;
    num[static_cast<std::size_t>(v - lo)] -= 1;
  }

  // exact division by t^p - 1: n(x) = q(x-p) - q(x)
  const std::int64_t p = K.p;
  std::vector<std::int64_t> quot(static_cast<std::size_t>(w + 2 - p), 0);
  for (std::int64_t x = w + 1; x >= p; --x) {
    const std::int64_t qx =
        (x <= w + 1 - p) ? quot[static_cast<std::size_t>(x)] : 0;
    quot[static_cast<std::size_t>(x - p)] = num[static_cast<std::size_t>(x)] + qx;
  }
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t qx = (x <= w + 1 - p) ? quot[static_cast<std::size_t>(x)] : 0;
    if (num[static_cast<std::size_t>(x)] + qx != 0)
      throw DivisionNotExact("alexander_polynomial: nonzero remainder at exponent " +
                             std::to_string(x));
  }

  std::vector<LaurentPolynomial::Term> terms;
  std::int64_t emin = 0, emax = 0;
  bool seen = false;
  for (std::size_t e = 0; e < quot.size(); ++e) {
    if (quot[e] == 0) continue;
    if (!seen) emin = static_cast<std::int64_t>(e), seen = true;
    emax = static_cast<std::int64_t>(e);
  }
  if (!seen) throw DivisionNotExact("alexander_polynomial: zero quotient");
  const std::int64_t center2 = emin + emax;  // recentering shift, doubled
  for (std::size_t e = 0; e < quot.size(); ++e)
    if (quot[e] != 0) terms.push_back({2 * static_cast<std::int64_t>(e) - center2, quot[e]});
  LaurentPolynomial delta = LaurentPolynomial::from_terms(std::move(terms));

  const std::int64_t at_one = delta.evaluate_at_one();
  if (at_one == -1) delta = LaurentPolynomial::constant(0) - delta;
  if (delta.evaluate_at_one() != 1 || !delta.is_symmetric() || center2 % 2 != 0)
    throw DivisionNotExact("alexander_polynomial: normalization failed (Delta(1) = " +
                           std::to_string(at_one) + ")");
  return delta;
}

}  // namespace sk

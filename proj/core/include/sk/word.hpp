#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sk/knot.hpp"
#include "sk/laurent.hpp"

namespace sk {

// A word in the free group on {a, m} together with the abelianization
// weights |a| and |m|. For the relator of K(p,q,k): |a| = k, |m| = -p and
// the total weight is 0.
struct Word {
  struct Letter {
    char generator = 'a';  // 'a' or 'm'
    int exponent = 1;      // +1 or -1
  };
  std::vector<Letter> letters;
  std::int64_t weight_a = 0;
  std::int64_t weight_m = 0;

  std::int64_t weight_of(char generator) const { return generator == 'a' ? weight_a : weight_m; }
  // Total abelianization |w|.
  std::int64_t total_weight() const;
  // e.g. "amama^3" collapses runs; used for display only.
  std::string to_string() const;
};

// The p-syllable relator w = w_0 ... w_{p-1} with w_i = "ma" when
// iq mod p lies in [1,k] and "a" otherwise; weights |a| = k, |m| = -p.
Word relator_word(const SimpleKnot& K);

// Fox free derivative of w by the given generator, evaluated in the
// abelianization: one monomial t^{|prefix|} per positive occurrence and
// -t^{|prefix| - |g|} per inverse occurrence. Exponents are integers
// (stored doubled like every LaurentPolynomial).
LaurentPolynomial free_derivative(const Word& w, char generator);

// Fox's fundamental formula:
//   t^{|w|} - 1 = d_a(w)(t^{|a|}-1) + d_m(w)(t^{|m|}-1).
bool fundamental_formula_check(const Word& w);

}  // namespace sk

#include "sk/word.hpp"

namespace sk {

std::int64_t Word::total_weight() const {
  std::int64_t w = 0;
  for (const Letter& l : letters) w += l.exponent * weight_of(l.generator);
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j].generator == letters[i].generator &&
           letters[j].exponent == letters[i].exponent)
      ++j;
    const std::size_t run = j - i;
    out += letters[i].generator;
    if (letters[i].exponent < 0)
      out += run > 1 ? "^-" + std::to_string(run) : "^-1";
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Word relator_word(const SimpleKnot& K) {
  Word w;
  w.weight_a = K.k;
  w.weight_m = -K.p;
  w.letters.reserve(static_cast<std::size_t>(K.p + K.k));
  std::int64_t r = 0;  // iq mod p
  for (std::int64_t i = 0; i < K.p; ++i) {
    if (r >= 1 && r <= K.k) w.letters.push_back({'m', 1});
    w.letters.push_back({'a', 1});
    r += K.q;
    if (r >= K.p) r -= K.p;
  }
  return w;
}

LaurentPolynomial free_derivative(const Word& w, char generator) {
  std::vector<LaurentPolynomial::Term> terms;
  std::int64_t prefix = 0;
  for (const Word::Letter& l : w.letters) {
    const std::int64_t wt = l.exponent * w.weight_of(l.generator);
    if (l.generator == generator) {
      if (l.exponent > 0)
        terms.push_back({2 * prefix, 1});
      else
        terms.push_back({2 * (prefix + wt), -1});
    }
    prefix += wt;
  }
  return LaurentPolynomial::from_terms(std::move(terms));
}

bool fundamental_formula_check(const Word& w) {
  auto edge = [](std::int64_t weight) {
    // t^weight - 1
    return LaurentPolynomial::monomial(2 * weight, 1) - LaurentPolynomial::constant(1);
  };
  const LaurentPolynomial lhs = edge(w.total_weight());
  const LaurentPolynomial rhs =
      free_derivative(w, 'a') * edge(w.weight_a) + free_derivative(w, 'm') * edge(w.weight_m);
  return lhs == rhs;
}

}  // namespace sk

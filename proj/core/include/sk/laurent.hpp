#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sk {

// Integer Laurent polynomial in t^{1/2}: exponents are stored doubled, so
// term (d, c) means c * t^{d/2}. Terms are kept sorted by exponent with no
// stored zero coefficients. Half-integer gradings of even-p knots therefore
// need no fractional arithmetic.
class LaurentPolynomial {
 public:
  using Term = std::pair<std::int64_t, std::int64_t>;  // (doubled exponent, coefficient)

  LaurentPolynomial() = default;

  static LaurentPolynomial constant(std::int64_t c);
  // monomial c * t^{d/2}
  static LaurentPolynomial monomial(std::int64_t doubled_exp, std::int64_t c);
  // from unsorted (doubled exponent, coefficient) pairs; combines and drops zeros
  static LaurentPolynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coeff(std::int64_t doubled_exp) const;
  std::int64_t min_doubled_exp() const;  // requires !is_zero()
  std::int64_t max_doubled_exp() const;

  std::int64_t evaluate_at_one() const;  // sum of coefficients
  bool is_symmetric() const;             // P(t^{-1}) == P(t)
  LaurentPolynomial negated_exponents() const;
  LaurentPolynomial shifted(std::int64_t doubled_shift) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Human form, ascending exponents: "t^-1 - 1 + t", "t^{3/2} + t^{-1/2}".
  std::string to_string() const;
  // Wire form: sorted "doubled-exponent:coefficient" pairs joined by commas.
  std::string serialize() const;
  static LaurentPolynomial deserialize(const std::string& s);

 private:
  std::vector<Term> terms_;
};

}  // namespace sk

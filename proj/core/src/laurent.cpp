#include "sk/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sk {

LaurentPolynomial LaurentPolynomial::constant(std::int64_t c) { return monomial(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t doubled_exp, std::int64_t c) {
  LaurentPolynomial out;
  if (c != 0) out.terms_.push_back({doubled_exp, c});
  return out;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  LaurentPolynomial out;
  out.terms_.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == e) {
      out.terms_.back().second += c;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (c != 0) {
      out.terms_.push_back({e, c});
    }
  }
  return out;
}

std::int64_t LaurentPolynomial::coeff(std::int64_t doubled_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), doubled_exp,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  return (it != terms_.end() && it->first == doubled_exp) ? it->second : 0;
}

std::int64_t LaurentPolynomial::min_doubled_exp() const { return terms_.front().first; }
std::int64_t LaurentPolynomial::max_doubled_exp() const { return terms_.back().first; }

std::int64_t LaurentPolynomial::evaluate_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::negated_exponents() const {
  LaurentPolynomial out;
  out.terms_.resize(terms_.size());
  std::transform(terms_.rbegin(), terms_.rend(), out.terms_.begin(),
                 [](const Term& t) { return Term{-t.first, t.second}; });
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t doubled_shift) const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) e += doubled_shift;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  merged.insert(merged.end(), terms_.begin(), terms_.end());
  merged.insert(merged.end(), rhs.terms_.begin(), rhs.terms_.end());
  *this = from_terms(std::move(merged));
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  merged.insert(merged.end(), terms_.begin(), terms_.end());
  for (const auto& [e, c] : rhs.terms_) merged.push_back({e, -c});
  *this = from_terms(std::move(merged));
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  std::vector<LaurentPolynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) prod.push_back({ea + eb, ca * cb});
  return LaurentPolynomial::from_terms(std::move(prod));
}

namespace {

std::string power_string(std::int64_t doubled_exp) {
  if (doubled_exp == 0) return "1";
  if (doubled_exp == 2) return "t";
  if (doubled_exp % 2 == 0) return "t^" + std::to_string(doubled_exp / 2);
  return "t^{" + std::to_string(doubled_exp) + "/2}";
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::int64_t mag = std::abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (mag != 1 || e == 0)
      out += std::to_string(mag) + (e != 0 ? "*" + power_string(e) : "");
    else
      out += power_string(e);
  }
  return out;
}

std::string LaurentPolynomial::serialize() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += ",";
    out += std::to_string(e) + ":" + std::to_string(c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::deserialize(const std::string& s) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string field = s.substr(pos, comma - pos);
    const std::size_t colon = field.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad polynomial field: " + field);
    terms.push_back({std::stoll(field.substr(0, colon)), std::stoll(field.substr(colon + 1))});
    pos = comma + 1;
  }
  return from_terms(std::move(terms));
}

}  // namespace sk

#include "recip/laurent.hpp"

#include <algorithm>

namespace recip {

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const Rational& c) {
  LaurentPolynomial p;
  p.add_term(e, c);
  return p;
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  out.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

void LaurentPolynomial::multiply_binomial(const ExponentVector& m, int power) {
  for (int p = 0; p < power; ++p) {
    Map next;
    next.reserve(terms_.size() * 2);
    auto put = [&next](ExponentVector e, const Rational& c) {
      auto [it, inserted] = next.try_emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
      }
    };
    for (const auto& [e, c] : terms_) {
      put(e, c);
      put(e + m, -c);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    terms_ = std::move(next);
  }
}

std::vector<std::pair<ExponentVector, Rational>> LaurentPolynomial::sorted() const {
  std::vector<std::pair<ExponentVector, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [e, c] : a.terms_) {
    auto it = b.terms_.find(e);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

}  // namespace recip

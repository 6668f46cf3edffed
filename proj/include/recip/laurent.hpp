#pragma once

#include "recip/exponent.hpp"
#include "recip/rational.hpp"

#include <unordered_map>
#include <vector>

namespace recip {

/// Sparse Laurent polynomial with exact rational coefficients.
class LaurentPolynomial {
 public:
  using Map = std::unordered_map<ExponentVector, Rational, ExponentHash>;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const ExponentVector& e, const Rational& c);

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const Rational& c);
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  /// Multiplies in place by (1 - x^m)^power.
  void multiply_binomial(const ExponentVector& m, int power);

  /// Sorted (storage order) for deterministic output.
  std::vector<std::pair<ExponentVector, Rational>> sorted() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  Map terms_;
};

}  // namespace recip

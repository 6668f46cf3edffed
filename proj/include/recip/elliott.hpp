#pragma once

#include "recip/exponent.hpp"
#include "recip/laurent.hpp"
#include "recip/order.hpp"
#include "recip/rational.hpp"

#include <string>
#include <vector>

namespace recip {

/// The binomial (1 - x^monomial)^multiplicity appearing in a denominator.
struct ElliottFactor {
  ExponentVector monomial;
  int multiplicity = 1;

  friend bool operator==(const ElliottFactor&, const ElliottFactor&) = default;
  friend auto operator<=>(const ElliottFactor&, const ElliottFactor&) = default;
};

/// coefficient * x^numerator / prod (1 - x^m)^mult.
struct ElliottTerm {
  Rational coefficient{1};
  ExponentVector numerator;
  std::vector<ElliottFactor> denominator;  // sorted by monomial, monomials distinct

  /// Sorts and merges equal factor monomials; rejects the zero monomial.
  static ElliottTerm make(Rational coefficient, ExponentVector numerator,
                          std::vector<ElliottFactor> factors);

  bool same_shape(const ElliottTerm& o) const {
    return numerator == o.numerator && denominator == o.denominator;
  }
  int factor_count() const;
};

/// A sum of ElliottTerms over a fixed variable space. No implicit
/// cancellation happens; equality of values is decided by is_zero/equals.
class ElliottRational {
 public:
  explicit ElliottRational(VariableSpace space = {}) : space_(space) {}
  ElliottRational(VariableSpace space, std::vector<ElliottTerm> terms);

  static ElliottRational constant(VariableSpace space, const Rational& c);
  static ElliottRational monomial(VariableSpace space, const ExponentVector& e,
                                  const Rational& c = Rational(1));
  /// 1 / prod (1 - x^m).
  static ElliottRational reciprocal(VariableSpace space, std::vector<ElliottFactor> factors);

  const VariableSpace& space() const { return space_; }
  const std::vector<ElliottTerm>& terms() const { return terms_; }
  std::vector<ElliottTerm>& terms() { return terms_; }
  bool empty() const { return terms_.empty(); }

  void push(ElliottTerm t);

 private:
  VariableSpace space_;
  std::vector<ElliottTerm> terms_;
};

ElliottRational operator+(const ElliottRational& f, const ElliottRational& g);
ElliottRational operator-(const ElliottRational& f);
ElliottRational operator-(const ElliottRational& f, const ElliottRational& g);
ElliottRational operator*(const ElliottRational& f, const ElliottRational& g);
ElliottRational operator*(const Rational& c, const ElliottRational& f);

inline ElliottRational add(const ElliottRational& f, const ElliottRational& g) { return f + g; }
inline ElliottRational negate(const ElliottRational& f) { return -f; }
inline ElliottRational multiply(const ElliottRational& f, const ElliottRational& g) { return f * g; }

/// Merges terms with identical numerator and denominator, drops zero
/// coefficients and sorts terms canonically. The value is unchanged.
ElliottRational canonicalize(const ElliottRational& f);

/// Rewrites every factor so that its monomial m satisfies m > 1:
/// 1/(1-m) = -m^{-1}/(1-m^{-1}). LambdaAdic orders only touch factors that
/// depend on their lambda.
ElliottTerm orient_term(const ElliottTerm& t, const OrderSpec& ord, const VariableSpace& space);
ElliottRational orient(const ElliottRational& f, const OrderSpec& ord);

/// Exact zero test by cross multiplication over the common denominator.
bool is_zero(const ElliottRational& f);
bool equals(const ElliottRational& f, const ElliottRational& g);

/// Sum of all terms as N / D with D = prod over distinct factors at their
/// largest multiplicity (after orienting with the case-1 order).
struct CommonForm {
  LaurentPolynomial numerator;
  std::vector<ElliottFactor> denominator;
};
CommonForm common_denominator(const ElliottRational& f);

/// Replaces x_i by 1/x_i for the listed (0-based) x indices.
ElliottRational substitute_inverse(const ElliottRational& f, const std::vector<int>& x_indices);
ElliottRational substitute_inverse_all(const ElliottRational& f);

/// Power series coefficients up to total x-degree D. Every factor must be
/// lambda free with nonnegative x exponents of positive total degree.
LaurentPolynomial series_truncate(const ElliottRational& f, int degree);

/// Coefficients of the case-1 iterated Laurent expansion restricted to
/// monomials with all exponents >= 0 and total degree <= D. For a function
/// that is a power series this is its truncation even when individual terms
/// carry negative exponents.
LaurentPolynomial expand_in_box(const ElliottRational& f, int degree);

/// Drops the lambda coordinates (all of which must be zero).
ElliottRational drop_lambdas(const ElliottRational& f);
/// Embeds an x-only function into a space with `r` lambdas.
ElliottRational lift_to(const ElliottRational& f, const VariableSpace& space);

std::string term_string(const ElliottTerm& t, const VariableSpace& space);
std::string to_string(const ElliottRational& f);

}  // namespace recip

#pragma once

#include "recip/exponent.hpp"
#include "recip/rational.hpp"

#include <string>

namespace recip {

enum class OrderKind {
  Case1Identity,     // last nonzero coordinate decides: x_n >> ... >> x_1 >> l_r >> ... >> l_1
  Case2TotalDegree,  // x_i -> x_i t, l_i -> l_{r-i+1}, then the case-1 rule with t dominant
  Matrix,            // a <= b iff rho(a) <= rho(b) under the case-1 rule
  LambdaAdic,        // preorder on one lambda exponent: expansion at l=0 or l=infinity
};

enum class LambdaEnd { AtZero, AtInfinity };

enum class Cmp { Less, Equal, Greater };

Cmp flip(Cmp c);
const char* to_string(Cmp c);

/// A total monomial order (or, for LambdaAdic, the preorder used to expand
/// in K((l)) / K((1/l))). `reversed` selects the opposite order.
struct OrderSpec {
  OrderKind kind = OrderKind::Case1Identity;
  IntMatrix rho;  // Matrix kind only, square of size r+n
  int lambda = 0;
  LambdaEnd end = LambdaEnd::AtZero;
  bool reversed = false;

  static OrderSpec case1() { return {}; }
  static OrderSpec case2();
  /// Throws SingularOrder when rho is not invertible over Q.
  static OrderSpec matrix(IntMatrix rho);
  static OrderSpec lambda_adic(int lambda, LambdaEnd end);

  OrderSpec reverse() const {
    OrderSpec o = *this;
    o.reversed = !o.reversed;
    return o;
  }

  bool is_total() const { return kind != OrderKind::LambdaAdic; }
  /// rho sends x's to x-monomials and lambdas to lambda-monomials, so the
  /// contribution-sequence test applies.
  bool maps_blocks(const VariableSpace& space) const;
  std::string describe() const;
};

/// Sign of the monomial relative to 1: +1 when v > 0 (i.e. 1 < x^v).
int order_sign(const ExponentVector& v, const OrderSpec& ord, const VariableSpace& space);

/// a < b iff b - a > 0.
Cmp compare(const ExponentVector& a, const ExponentVector& b, const OrderSpec& ord,
            const VariableSpace& space);

}  // namespace recip

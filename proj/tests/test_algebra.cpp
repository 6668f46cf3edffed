#include "recip/elliott.hpp"
#include "recip/errors.hpp"
#include "recip/order.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace recip;
using namespace recip::testing;

namespace {

ExponentVector random_vector(std::mt19937_64& rng, int size, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  ExponentVector v(size);
  for (int i = 0; i < size; ++i) v[i] = d(rng);
  return v;
}

std::vector<OrderSpec> all_total_orders() {
  IntMatrix rho = IntMatrix::Identity(4, 4);
  rho(3, 0) = 2;
  rho(1, 2) = -1;
  return {OrderSpec::case1(), OrderSpec::case2(), OrderSpec::matrix(rho)};
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, NegativeBinomialWeights) {
  // (1-m)^-3 = sum C(k+2,2) m^k
  EXPECT_EQ(negative_binomial_weight(0, 3), 1);
  EXPECT_EQ(negative_binomial_weight(4, 3), 15);
  EXPECT_EQ(negative_binomial_weight(5, 1), 1);
  EXPECT_EQ(clearing_multiplier({Rational(1, 6), Rational(3, 4), Rational(2)}), 12);
}

TEST(Rational, ExactRankAndDeterminant) {
  IntMatrix m = int_matrix({{3, -1, -2}, {-1, 1, -1}});
  EXPECT_EQ(exact_rank(m), 2);
  EXPECT_EQ(exact_rank(int_matrix({{1, 2}, {2, 4}})), 1);
  EXPECT_EQ(exact_determinant(int_matrix({{3, -1}, {-1, 1}})), 2);
  EXPECT_EQ(exact_determinant(int_matrix({{0, 1}, {1, 0}})), -1);
}

TEST(Order, Case1DominantCoordinate) {
  const VariableSpace xy{0, 2};
  // y dominates x, matching 1/(x-y) = sum y^k / x^{k+1}.
  EXPECT_EQ(compare(ExponentVector{0, 1}, ExponentVector{1, 0}, OrderSpec::case1(), xy), Cmp::Greater);
  EXPECT_EQ(compare(ExponentVector{0, 0}, ExponentVector{1, -2}, OrderSpec::case1(), xy), Cmp::Greater);
  const VariableSpace lx{1, 1};
  EXPECT_EQ(compare(ExponentVector{1, 0}, ExponentVector{0, 1}, OrderSpec::case1(), lx), Cmp::Less);
}

TEST(Order, Case2TotalDegreeFirst) {
  const VariableSpace s{2, 2};
  const OrderSpec o = OrderSpec::case2();
  // x1 beats any lambda power; x2 beats x1 at equal degree; x1^2 beats x2.
  EXPECT_EQ(order_sign(ExponentVector{-9, 7, 1, 0}, o, s), 1);
  EXPECT_EQ(compare(ExponentVector{0, 0, 1, 0}, ExponentVector{0, 0, 0, 1}, o, s), Cmp::Less);
  EXPECT_EQ(compare(ExponentVector{0, 0, 0, 1}, ExponentVector{0, 0, 2, 0}, o, s), Cmp::Less);
  // lambda_1 maps to lambda_r, so it dominates lambda_2 among the lambdas.
  EXPECT_EQ(compare(ExponentVector{0, 1, 0, 0}, ExponentVector{1, 0, 0, 0}, o, s), Cmp::Less);
}

TEST(Order, SingularMatrixRejected) {
  EXPECT_THROW(OrderSpec::matrix(int_matrix({{1, 2}, {2, 4}})), Error);
  try {
    OrderSpec::matrix(int_matrix({{1, 1}, {1, 1}}));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularOrder);
  }
}

TEST(Order, LengthMismatch) {
  EXPECT_THROW(compare(ExponentVector{1, 2}, ExponentVector{1, 2, 3}, OrderSpec::case1(), {0, 2}), Error);
}

TEST(Order, TotalityCompatibilityAndReversal) {
  std::mt19937_64 rng(11);
  const VariableSpace s{2, 2};
  for (const OrderSpec& o : all_total_orders()) {
    for (int trial = 0; trial < 300; ++trial) {
      ExponentVector a = random_vector(rng, 4, 3), b = random_vector(rng, 4, 3), c = random_vector(rng, 4, 5);
      Cmp ab = compare(a, b, o, s), ba = compare(b, a, o, s);
      if (a == b) {
        EXPECT_EQ(ab, Cmp::Equal);
        continue;
      }
      EXPECT_NE(ab, Cmp::Equal) << o.describe();
      EXPECT_EQ(ab, flip(ba));
      EXPECT_EQ(compare(a + c, b + c, o, s), ab);
      EXPECT_EQ(compare(a, b, o.reverse(), s), flip(ab));
    }
  }
}

TEST(Order, LambdaAdicIsAPreorderOnOneCoordinate) {
  const VariableSpace s{2, 1};
  const OrderSpec zero = OrderSpec::lambda_adic(0, LambdaEnd::AtZero);
  const OrderSpec inf = OrderSpec::lambda_adic(0, LambdaEnd::AtInfinity);
  EXPECT_EQ(order_sign(ExponentVector{2, -5, -5}, zero, s), 1);
  EXPECT_EQ(order_sign(ExponentVector{2, -5, -5}, inf, s), -1);
  EXPECT_EQ(order_sign(ExponentVector{0, 3, 1}, zero, s), 0);
  EXPECT_FALSE(zero.is_total());
}

TEST(Elliott, ZeroMonomialRejected) {
  EXPECT_THROW(ElliottTerm::make(Rational(1), ExponentVector{0}, {{ExponentVector{0}, 1}}), Error);
}

TEST(Elliott, FactorsMergeIntoMultiplicities) {
  ElliottTerm t = ElliottTerm::make(Rational(1), ExponentVector{0}, {{ExponentVector{1}, 1}, {ExponentVector{1}, 2}});
  ASSERT_EQ(t.denominator.size(), 1u);
  EXPECT_EQ(t.denominator[0].multiplicity, 3);
  EXPECT_EQ(t.factor_count(), 3);
}

TEST(Elliott, OrientationExamples) {
  const VariableSpace x{0, 1};
  ElliottRational f = x_function(1, {{{-1}, 1}});
  ElliottRational g = orient(f, OrderSpec::case1());
  ASSERT_EQ(g.terms().size(), 1u);
  EXPECT_EQ(to_string(g), "-x1/(1-x1)");
  EXPECT_TRUE(equals(f, g));

  const VariableSpace lx{1, 1};
  ElliottRational h = ElliottRational::reciprocal(lx, {{ExponentVector{1, 1}, 1}});
  EXPECT_EQ(to_string(orient(h, OrderSpec::case1())), to_string(h));

  // 1/(1 - y/x) in C<<x,y>>: y/x > 1 already.
  ElliottRational k = x_function(2, {{{-1, 1}, 1}});
  EXPECT_EQ(to_string(orient(k, OrderSpec::case1())), to_string(k));
}

TEST(Elliott, OrientationSoundness) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> mult(1, 2), count(1, 3);
  for (const OrderSpec& o : all_total_orders()) {
    const VariableSpace s{2, 2};
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<ElliottFactor> den;
      for (int i = count(rng); i > 0; --i) {
        ExponentVector m = random_vector(rng, 4, 2);
        if (m.is_zero()) m[3] = 1;
        den.push_back({m, mult(rng)});
      }
      ElliottRational f(s, {ElliottTerm::make(Rational(2, 3), random_vector(rng, 4, 2), den)});
      ElliottRational g = orient(f, o);
      EXPECT_TRUE(equals(f, g));
      for (const ElliottFactor& d : g.terms()[0].denominator) EXPECT_EQ(order_sign(d.monomial, o, s), 1);
    }
  }
}

TEST(Elliott, ArithmeticExamples) {
  ElliottRational geo = x_function(1, {{{1}, 1}});
  EXPECT_TRUE(is_zero(geo - geo));
  EXPECT_TRUE(equals(geo * geo, x_function(1, {{{1}, 2}})));
  ElliottRational shifted = ElliottRational::monomial({0, 1}, ExponentVector{1}) * geo + ElliottRational::constant({0, 1}, 1);
  EXPECT_TRUE(is_zero(add(shifted, negate(geo))));
  EXPECT_FALSE(equals(geo, x_function(1, {{{2}, 1}})));
  EXPECT_FALSE(equals(x_function(2, {{{1, 0}, 1}}), x_function(2, {{{0, 1}, 1}})));
}

TEST(Elliott, ElliottIdentity) {
  // A = l x, B = y / l in (l, x, y).
  const VariableSpace s{1, 2};
  ExponentVector A{1, 1, 0}, B{-1, 0, 1};
  ElliottRational lhs = ElliottRational::reciprocal(s, {{A, 1}, {B, 1}});
  ElliottRational rhs = ElliottRational::reciprocal(s, {{A + B, 1}}) *
                        (ElliottRational::reciprocal(s, {{A, 1}}) + ElliottRational::reciprocal(s, {{B, 1}}) -
                         ElliottRational::constant(s, 1));
  EXPECT_TRUE(equals(lhs, rhs));

  std::mt19937_64 rng(17);
  const OrderSpec o = OrderSpec::case1();
  const VariableSpace t{2, 2};
  for (int trial = 0; trial < 60; ++trial) {
    ExponentVector a = random_vector(rng, 4, 3), b = random_vector(rng, 4, 3);
    if (a.is_zero() || b.is_zero() || (a + b).is_zero()) continue;
    if (order_sign(a, o, t) < 0) a = -a;
    if (order_sign(b, o, t) < 0) b = -b;
    ElliottRational l = ElliottRational::reciprocal(t, {{a, 1}, {b, 1}});
    ElliottRational r = ElliottRational::reciprocal(t, {{a + b, 1}}) *
                        (ElliottRational::reciprocal(t, {{a, 1}}) + ElliottRational::reciprocal(t, {{b, 1}}) -
                         ElliottRational::constant(t, 1));
    EXPECT_TRUE(equals(l, r));
  }
}

TEST(Elliott, ZeroTestAgreesWithSeries) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(0, 2), coef(-2, 2), terms(1, 4);
  int nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const VariableSpace s{0, 2};
    // Pairs of nearly cancelling representations keep zero and nonzero cases both common.
    ElliottRational f(s);
    for (int k = terms(rng); k > 0; --k) {
      ExponentVector m{e(rng), e(rng)};
      if (m.is_zero()) m[0] = 1;
      ExponentVector num{e(rng), e(rng)};
      Rational c(coef(rng));
      if (c == 0) continue;
      f.push(ElliottTerm::make(c, num, {{m, 1}}));
      if (trial % 2) {
        // x^num/(1-m) = x^num + x^{num+m}/(1-m)
        f.push(ElliottTerm::make(-c, num, {}));
        f.push(ElliottTerm::make(-c, num + m, {{m, 1}}));
      }
    }
    bool series_zero = series_truncate(f, 12).is_zero();
    EXPECT_EQ(is_zero(f), series_zero);
    nonzero += !series_zero;
  }
  EXPECT_GT(nonzero, 10);
}

TEST(Elliott, SubstituteInverse) {
  ElliottRational f = x_function(2, {{{1, 1}, 1}});
  EXPECT_EQ(to_string(substitute_inverse_all(f)), "1/(1-x1^-1*x2^-1)");
  // x/(1-x) at 1/x equals -1/(1-x).
  ElliottRational g = x_function(1, {{{1}, 1}}, {1});
  EXPECT_TRUE(equals(substitute_inverse(g, {0}), -x_function(1, {{{1}, 1}})));
}

TEST(Elliott, CrudeFormsAtInvertedVariables) {
  LDSystem sys = example_system(2, -1);
  ElliottRational ebar = crude_Ebar(sys);
  // Invert lambdas and x's: negate every exponent.
  ElliottRational inv(ebar.space());
  for (const ElliottTerm& t : ebar.terms()) {
    std::vector<ElliottFactor> den;
    for (const ElliottFactor& d : t.denominator) den.push_back({-d.monomial, d.multiplicity});
    inv.push(ElliottTerm::make(t.coefficient, -t.numerator, den));
  }
  EXPECT_TRUE(equals(inv, -crude_E(sys)));
}

TEST(Elliott, SeriesTruncate) {
  LaurentPolynomial p = series_truncate(x_function(2, {{{1, 1}, 1}}), 4);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.coefficient(ExponentVector{2, 2}), 1);
  LaurentPolynomial q = series_truncate(x_function(1, {{{1}, 2}}), 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(q.coefficient(ExponentVector{k}), k + 1);
  EXPECT_EQ(q.size(), 4u);
  try {
    series_truncate(x_function(2, {{{1, -1}, 1}}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPowerSeriesExpandable);
  }
}

TEST(Elliott, ExpandInBoxHandlesNegativeExponentTerms) {
  // -1/(1-x)^2 + 2/(1-x)^3 = (1+x)/(1-x)^3
  const VariableSpace u{0, 1};
  ElliottRational f(u, {ElliottTerm::make(Rational(-1), ExponentVector{0}, {{ExponentVector{1}, 2}}),
                        ElliottTerm::make(Rational(2), ExponentVector{0}, {{ExponentVector{1}, 3}})});
  LaurentPolynomial p = expand_in_box(f, 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(p.coefficient(ExponentVector{k}), (k + 1) * (k + 1));
  // x1^-1 x2 /(1 - x1^-1 x2) - ... : x2/(x1 - x2) + x1/(x1 - x2) = ... write 1 = (x1 - x2)/(x1 - x2)
  const VariableSpace s{0, 2};
  ElliottRational g(s, {ElliottTerm::make(Rational(1), ExponentVector{-1, 1}, {{ExponentVector{-1, 1}, 1}}),
                        ElliottTerm::make(Rational(-1), ExponentVector{0, 0}, {{ExponentVector{-1, 1}, 1}}),
                        ElliottTerm::make(Rational(1), ExponentVector{0, 0}, {})});
  EXPECT_TRUE(expand_in_box(g, 5).is_zero());
}

TEST(Elliott, CommonDenominatorUsesLargestMultiplicity) {
  ElliottRational f = x_function(1, {{{1}, 2}}) + x_function(1, {{{1}, 1}});
  CommonForm c = common_denominator(f);
  ASSERT_EQ(c.denominator.size(), 1u);
  EXPECT_EQ(c.denominator[0].multiplicity, 2);
  // 1 + (1 - x) = 2 - x
  EXPECT_EQ(c.numerator.coefficient(ExponentVector{0}), 2);
  EXPECT_EQ(c.numerator.coefficient(ExponentVector{1}), -1);
}

TEST(Laurent, Arithmetic) {
  LaurentPolynomial p = LaurentPolynomial::monomial(ExponentVector{1, 0}, 2);
  p.add_term(ExponentVector{0, 1}, -1);
  LaurentPolynomial q = p * p;
  EXPECT_EQ(q.coefficient(ExponentVector{1, 1}), -4);
  p.add_term(ExponentVector{0, 1}, 1);
  EXPECT_EQ(p.size(), 1u);
  LaurentPolynomial r = LaurentPolynomial::monomial(ExponentVector{0, 0}, 1);
  r.multiply_binomial(ExponentVector{1, 0}, 2);
  EXPECT_EQ(r.coefficient(ExponentVector{1, 0}), -2);
  EXPECT_EQ(r.coefficient(ExponentVector{2, 0}), 1);
}

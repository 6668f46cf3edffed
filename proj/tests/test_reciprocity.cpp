#include "recip/errors.hpp"
#include "recip/grid.hpp"
#include "recip/reciprocity.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace recip;
using namespace recip::testing;

namespace {

const VariableSpace kLxy{1, 2};

ElliottRational two_factor() {
  return ElliottRational::reciprocal(kLxy, {{ExponentVector{1, 1, 0}, 1}, {ExponentVector{-1, 0, 1}, 1}});
}

ElliottRational one_factor() { return ElliottRational::reciprocal({1, 1}, {{ExponentVector{1, 1}, 1}}); }

LDSystem second_example(Exponent b, Exponent c) {
  return make_system(int_matrix({{1, -1, 1}, {3, -1, -2}}), int_vector({-c, b}));
}

/// Condition (3): both one-sided constant terms of the single-equation crude form vanish.
bool condition_three(const std::vector<Exponent>& a, Exponent b) {
  IntMatrix A(1, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) A(0, i) = a[i];
  ElliottRational crude = crude_E(make_system(A, int_vector({b})));
  return is_zero(ct_at_zero(crude, 0)) && is_zero(ct_at_infinity(crude, 0));
}

}  // namespace

TEST(SingleEquation, Examples) {
  EXPECT_TRUE(single_equation_r_property({1, -1}, 0));
  for (Exponent b = -10; b <= 10; ++b) EXPECT_EQ(single_equation_r_property({3, -1, -2}, b), b >= -2 && b <= 2) << b;
  EXPECT_FALSE(single_equation_r_property({2, -5}, 7));
  EXPECT_TRUE(single_equation_r_property({2, -5}, 1));
}

TEST(SingleEquation, ZeroRow) {
  EXPECT_TRUE(single_equation_r_property({0, 0}, 3));
  EXPECT_FALSE(single_equation_r_property({0, 0}, 0));
  try {
    single_equation_r_property({0}, 1, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AllZeroRow);
  }
}

TEST(SingleEquation, Semigroup) {
  EXPECT_FALSE(semigroup_contains({2, 5}, 1));
  EXPECT_FALSE(semigroup_contains({2, 5}, 3));
  EXPECT_TRUE(semigroup_contains({2, 5}, 0));
  for (Exponent v = 4; v < 30; ++v) EXPECT_TRUE(semigroup_contains({2, 5}, v));
  EXPECT_FALSE(semigroup_contains({2, 5}, -1));
}

TEST(SingleEquation, CriterionMatchesConstantTerms) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> n_dist(1, 3), e(-4, 4), b_dist(-10, 10);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Exponent> a(n_dist(rng));
    for (auto& v : a) v = e(rng);
    Exponent b = b_dist(rng);
    EXPECT_EQ(single_equation_r_property(a, b), condition_three(a, b));
  }
}

TEST(RProperty, Examples) {
  RPropertyResult r = r_property(two_factor(), OrderSpec::case1(), 1);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(equals(r.ct, x_function(2, {{{1, 1}, 1}})));
  EXPECT_TRUE(equals(r.ct_reversed, -x_function(2, {{{1, 1}, 1}})));
  RPropertyResult s = r_property(one_factor(), OrderSpec::case1(), 1);
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(to_string(s.ct), "1");
  EXPECT_TRUE(s.ct_reversed.empty());
  EXPECT_TRUE(r_property(crude_E(example_system(0, 0)), OrderSpec::case1()).holds);
}

TEST(RProperty, ReversalInvolution) {
  for (auto [b, c] : {std::pair<Exponent, Exponent>{0, 0}, {3, 0}, {-1, 2}, {4, -4}}) {
    ElliottRational crude = crude_E(example_system(b, c));
    EXPECT_EQ(r_property(crude, OrderSpec::case1()).holds, r_property(crude, OrderSpec::case1().reverse()).holds);
  }
}

TEST(IProperty, Examples) {
  EXPECT_TRUE(i_property(two_factor(), OrderSpec::case1()).holds);
  IPropertyResult f = i_property(one_factor(), OrderSpec::case1());
  EXPECT_FALSE(f.holds);
  EXPECT_EQ(f.failed_stage, 1);
  ASSERT_TRUE(f.nonzero_value.has_value());
  EXPECT_EQ(to_string(drop_lambdas(*f.nonzero_value)), "1");
}

TEST(IProperty, PerTermIsStronger) {
  for (Exponent b = -4; b <= 4; ++b)
    for (Exponent c = -4; c <= 4; ++c) {
      ElliottRational crude = crude_E(example_system(b, c));
      bool per_term = i_property(crude, OrderSpec::case1(), IMode::PerTerm).holds;
      bool sum = i_property(crude, OrderSpec::case1(), IMode::SumLevel).holds;
      if (per_term) EXPECT_TRUE(sum);
      PropertyReport report = property_report(crude, OrderSpec::case1());
      if (report.i.holds) EXPECT_TRUE(report.r.holds);
    }
}

TEST(Monster, FirstExampleEquations) {
  MonsterVerdict v = monster_check(matrix_form(example_system(0, 0)), OrderSpec::case1());
  ASSERT_EQ(v.checked.size(), 2u);
  EXPECT_EQ(v.checked[0].equation.to_string(), "3*a1 - a2 - 2*a3 = 0");
  EXPECT_EQ(v.checked[1].equation.to_string(), "2*a2 - 5*a3 = 0");
  EXPECT_TRUE(v.holds);

  MonsterVerdict w = monster_check(matrix_form(example_system(3, 0)), OrderSpec::case1());
  EXPECT_FALSE(w.holds);
  ASSERT_TRUE(w.failure.has_value());
  EXPECT_TRUE(w.checked[*w.failure].sequence.indices.empty());
}

TEST(Monster, SecondExampleEquations) {
  // b = 2, c = 1: a1 - a2 + a3 = -1, 2a2 - 5a3 = 5, 5a1 - 3a2 = 0
  MonsterVerdict v = monster_check(matrix_form(second_example(2, 1)), OrderSpec::case1());
  std::vector<std::string> eqs;
  for (const auto& c : v.checked) eqs.push_back(c.equation.to_string());
  EXPECT_EQ(eqs, (std::vector<std::string>{"a1 - a2 + a3 = -1", "2*a2 - 5*a3 = 5", "5*a1 - 3*a2 = 0"}));
}

TEST(Monster, RankDeficient) {
  try {
    monster_check(matrix_form(make_system(int_matrix({{1, -1}, {2, -2}}), int_vector({0, 0}))), OrderSpec::case1());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankDeficient);
  }
}

TEST(Monster, SoundnessOnRandomSystems) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(-3, 3), bd(-6, 6);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    IntMatrix A(2, 3);
    for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = e(rng);
    LDSystem sys = make_system(A, int_vector({bd(rng), bd(rng)}));
    if (rank(sys) < 2) continue;
    ++checked;
    if (monster_check(matrix_form(sys), OrderSpec::case1()).holds)
      EXPECT_TRUE(r_property(crude_E(sys), OrderSpec::case1()).holds) << A;
  }
  EXPECT_EQ(checked, 20);
}

TEST(Monster, WorkedGridCoincidences) {
  // On the worked grid the monster set matches the I set, and the last two
  // equations of the second presentation alone give the R set.
  GridOptions opts;
  opts.jobs = 1;
  GridResult g = run_grid(example_system(0, 0).A, {{-12, 12}, {-12, 12}}, opts);
  for (const GridRow& row : g.rows) {
    const Exponent b = row.b(0), c = row.b(1);
    ASSERT_FALSE(row.error);
    MonsterVerdict s = monster_check(matrix_form(second_example(b, c)), OrderSpec::case1());
    if (s.holds) EXPECT_TRUE(row.R) << b << "," << c;
    EXPECT_EQ(row.monster, row.I) << b << "," << c;
    bool last_two = s.checked.size() == 3 && s.checked[1].r_property && s.checked[2].r_property;
    EXPECT_EQ(last_two, row.R) << b << "," << c;
  }
}

TEST(ErrorTerms, SingleLambdaExamples) {
  ErrorTermDecomposition d = error_terms(one_factor(), OrderSpec::case1());
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(to_string(d.terms[0]), "1");
  EXPECT_TRUE(d.lhs.empty());
  ErrorTermDecomposition e = error_terms(two_factor(), OrderSpec::case1());
  EXPECT_TRUE(is_zero(e.terms[0]));
  EXPECT_TRUE(equals(e.lhs, -x_function(2, {{{1, 1}, 1}})));
}

TEST(ErrorTerms, WorkedSystem) {
  for (auto [b, c] : {std::pair<Exponent, Exponent>{0, 0}, {1, 0}, {-3, 2}, {5, -1}, {2, 2}}) {
    ElliottRational crude = crude_E(example_system(b, c));
    ErrorTermDecomposition d = error_terms(crude, OrderSpec::case1());
    ASSERT_EQ(d.terms.size(), 2u);
    ElliottRational diff = ct_all(crude, OrderSpec::case1().reverse()) - ct_all(crude, OrderSpec::case1());
    EXPECT_TRUE(equals(d.terms[0] + d.terms[1], diff));
  }
}

TEST(Homogeneous, Examples) {
  HomogeneousReport a = homogeneous_reciprocity(int_matrix({{1, -1}}));
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(equals(a.E, x_function(2, {{{1, 1}, 1}})));
  EXPECT_TRUE(equals(substitute_inverse_all(a.Ebar), -x_function(2, {{{1, 1}, 1}})));

  HomogeneousReport b = homogeneous_reciprocity(int_matrix({{1, 1, -1, -1}}));
  EXPECT_TRUE(b.holds);
  ElliottRational closed = x_function(4, {{{1, 0, 1, 0}, 1}, {{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}, {{0, 1, 0, 1}, 1}}) -
                           x_function(4, {{{1, 0, 1, 0}, 1}, {{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}, {{0, 1, 0, 1}, 1}},
                                      {1, 1, 1, 1});
  EXPECT_TRUE(equals(b.E, closed));

  EXPECT_TRUE(homogeneous_reciprocity(example_system(0, 0).A).holds);
  try {
    homogeneous_reciprocity(int_matrix({{1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoPositiveSolution);
  }
  EXPECT_THROW(homogeneous_reciprocity(int_matrix({{1, -1}, {2, -2}})), Error);
}

TEST(RecDomain, Examples) {
  DomainReport a = rec_domain_check(matrix_form(homogeneous_system(int_matrix({{1, -1}}))), OrderSpec::case1());
  EXPECT_EQ(a.classification, DomainClass::BothNonzero);
  EXPECT_TRUE(a.r_property);
  DomainReport b = rec_domain_check(matrix_form(homogeneous_system(int_matrix({{1, 1}}))), OrderSpec::case1());
  EXPECT_EQ(b.classification, DomainClass::Mixed);
  EXPECT_FALSE(b.r_property);
  EXPECT_EQ(to_string(b.ct), "1");
  // rho(x2) = 1/x2 on (l1, x1, x2)
  IntMatrix rho = IntMatrix::Identity(3, 3);
  rho(2, 2) = -1;
  DomainReport c = rec_domain_check(matrix_form(homogeneous_system(int_matrix({{1, -1}}))), OrderSpec::matrix(rho));
  EXPECT_EQ(c.r_property, c.classification != DomainClass::Mixed);
  EXPECT_THROW(rec_domain_check(matrix_form(example_system(1, 0)), OrderSpec::case1()), Error);
}

TEST(Grid, InclusionsAndStrictness) {
  GridOptions opts;
  opts.jobs = 2;
  GridResult g = run_grid(example_system(0, 0).A, {{-12, 12}, {-12, 12}}, opts);
  EXPECT_EQ(g.rows.size(), 625u);
  EXPECT_EQ(g.summary.errors, 0u);
  EXPECT_TRUE(g.summary.i_subset_r);
  EXPECT_TRUE(g.summary.monster_subset_r);
  EXPECT_LT(g.summary.i_count, g.summary.r_count);
  const GridRow& origin = g.rows[12 * 25 + 12];
  EXPECT_EQ(origin.b, int_vector({0, 0}));
  EXPECT_TRUE(origin.R && origin.monster);

  GridOptions serial = opts;
  serial.jobs = 1;
  EXPECT_EQ(grid_table(run_grid(example_system(0, 0).A, {{-3, 3}, {-2, 2}}, serial), 2),
            grid_table(run_grid(example_system(0, 0).A, {{-3, 3}, {-2, 2}}, opts), 2));
  EXPECT_EQ(grid_table(run_grid(example_system(0, 0).A, {{1, 0}, {0, 0}}, opts), 2), "b\tc\tR\tI\tmonster\n");
}

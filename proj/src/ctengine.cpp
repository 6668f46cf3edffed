#include "recip/ctengine.hpp"

#include "recip/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace recip {

namespace {

void check_lambda(const VariableSpace& space, int lambda) {
  if (lambda < 0 || lambda >= space.r)
    throw Error(Errc::InvalidInput, "lambda index " + std::to_string(lambda + 1) + " out of range");
}

int lambda_sign(const ElliottFactor& f, int slot) {
  Exponent e = f.monomial[slot];
  return e > 0 ? 1 : (e < 0 ? -1 : 0);
}

bool is_oriented(const ElliottTerm& t, int lambda, const OrderSpec& ord, const VariableSpace& space) {
  for (const ElliottFactor& f : t.denominator) {
    int s = order_sign(f.monomial, ord, space);
    if (s < 0) return false;
    if (s == 0 && ord.is_total()) return false;
    if (s == 0 && f.monomial[space.lambda(lambda)] != 0) return false;
  }
  return true;
}

void add_factor(std::vector<ElliottFactor>& factors, const ExponentVector& m, int mult) {
  if (mult > 0) factors.push_back({m, mult});
}

/// Sum over k >= 0 with sum |p_j| k_j = target of prod C(k_j + mu_j - 1, mu_j - 1) v_j^{k_j}.
void expand_constant_term(const ElliottTerm& t, const std::vector<ElliottFactor>& dependent,
                          const std::vector<ElliottFactor>& free_factors, int slot, Exponent target,
                          ElliottRational& out) {
  ExponentVector numerator = t.numerator;
  Rational coefficient = t.coefficient;
  auto rec = [&](auto&& self, std::size_t j, Exponent remaining) -> void {
    if (j == dependent.size()) {
      if (remaining != 0) return;
      ExponentVector num = numerator;
      num[slot] = 0;
      out.push(ElliottTerm::make(coefficient, std::move(num), free_factors));
      return;
    }
    const ElliottFactor& f = dependent[j];
    const Exponent p = std::abs(f.monomial[slot]);
    const Rational saved_coefficient = coefficient;
    const ExponentVector saved_numerator = numerator;
    for (Exponent k = 0; k * p <= remaining; ++k) {
      coefficient = saved_coefficient * Rational(negative_binomial_weight(k, f.multiplicity));
      numerator = saved_numerator + f.monomial * k;
      self(self, j + 1, remaining - k * p);
    }
    coefficient = saved_coefficient;
    numerator = saved_numerator;
  };
  rec(rec, 0, target);
}

/// Constant term of a term whose lambda-dependent factors share one sign.
void extract(const ElliottTerm& t, int lambda, const VariableSpace& space, ElliottRational& out) {
  const int slot = space.lambda(lambda);
  std::vector<ElliottFactor> dependent, free_factors;
  int direction = 0;
  for (const ElliottFactor& f : t.denominator) {
    int s = lambda_sign(f, slot);
    if (s == 0) {
      free_factors.push_back(f);
      continue;
    }
    if (direction != 0 && s != direction) throw Error(Errc::NoMixedPair, "extraction on a mixed term");
    direction = s;
    dependent.push_back(f);
  }
  const Exponent c = t.numerator[slot];
  if (direction == 0) {
    if (c == 0) out.push(t);
    return;
  }
  // PT factors contribute lambda^{p k} with p > 0, so the target is -c; NT mirrors it.
  const Exponent target = direction > 0 ? -c : c;
  if (target < 0) return;
  expand_constant_term(t, dependent, free_factors, slot, target, out);
}

}  // namespace

std::string ReductionMeasure::to_string() const {
  return "(" + std::to_string(max_abs) + "," + std::to_string(count_at_max) + "," + std::to_string(opposite) + ")";
}

FactorClass classify_factor(const ElliottFactor& f, int lambda, const OrderSpec& ord, const VariableSpace& space) {
  check_lambda(space, lambda);
  const Exponent e = f.monomial[space.lambda(lambda)];
  if (e == 0) return FactorClass::LambdaFree;
  int s = order_sign(f.monomial, ord, space);
  if (s == 0) throw Error(Errc::InvalidFactor, "factor cannot be oriented");
  return (s > 0 ? e : -e) > 0 ? FactorClass::PT : FactorClass::NT;
}

ReductionMeasure reduction_measure(const ElliottTerm& t, int lambda, const VariableSpace& space) {
  const int slot = space.lambda(lambda);
  ReductionMeasure m;
  int max_sign = 0;
  bool mixed_max = false;
  for (const ElliottFactor& f : t.denominator) {
    Exponent a = std::abs(f.monomial[slot]);
    if (a == 0) continue;
    int s = lambda_sign(f, slot);
    if (a > m.max_abs) {
      m.max_abs = a;
      m.count_at_max = f.multiplicity;
      max_sign = s;
      mixed_max = false;
    } else if (a == m.max_abs) {
      m.count_at_max += f.multiplicity;
      if (s != max_sign) mixed_max = true;
    }
  }
  if (m.max_abs == 0 || mixed_max) return m;
  for (const ElliottFactor& f : t.denominator)
    if (lambda_sign(f, slot) == -max_sign) m.opposite += f.multiplicity;
  return m;
}

bool has_mixed_pair(const ElliottTerm& t, int lambda, const VariableSpace& space) {
  const int slot = space.lambda(lambda);
  bool pos = false, neg = false;
  for (const ElliottFactor& f : t.denominator) {
    pos = pos || f.monomial[slot] > 0;
    neg = neg || f.monomial[slot] < 0;
  }
  return pos && neg;
}

std::vector<ElliottTerm> elliott_step(const ElliottTerm& t, int lambda, const OrderSpec& ord,
                                      const VariableSpace& space) {
  check_lambda(space, lambda);
  if (!is_oriented(t, lambda, ord, space)) throw Error(Errc::NotOriented, "term is not oriented");
  const int slot = space.lambda(lambda);
  int ia = -1;
  for (int i = 0; i < static_cast<int>(t.denominator.size()); ++i) {
    Exponent a = std::abs(t.denominator[i].monomial[slot]);
    if (a > 0 && (ia < 0 || a > std::abs(t.denominator[ia].monomial[slot]))) ia = i;
  }
  int ib = -1;
  if (ia >= 0) {
    const int sa = lambda_sign(t.denominator[ia], slot);
    for (int i = 0; i < static_cast<int>(t.denominator.size()); ++i) {
      if (lambda_sign(t.denominator[i], slot) != -sa) continue;
      if (ib < 0 || std::abs(t.denominator[i].monomial[slot]) > std::abs(t.denominator[ib].monomial[slot])) ib = i;
    }
  }
  if (ib < 0) throw Error(Errc::NoMixedPair, "no factors of opposite lambda sign");

  const ElliottFactor& A = t.denominator[ia];
  const ElliottFactor& B = t.denominator[ib];
  const ExponentVector AB = A.monomial + B.monomial;
  std::vector<ElliottFactor> base;
  for (int i = 0; i < static_cast<int>(t.denominator.size()); ++i) {
    const ElliottFactor& f = t.denominator[i];
    add_factor(base, f.monomial, (i == ia || i == ib) ? f.multiplicity - 1 : f.multiplicity);
  }
  base.push_back({AB, 1});

  std::vector<ElliottFactor> f1 = base, f2 = base;
  f1.push_back({A.monomial, 1});
  f2.push_back({B.monomial, 1});
  std::vector<ElliottTerm> out;
  out.push_back(ElliottTerm::make(t.coefficient, t.numerator, std::move(f1)));
  out.push_back(ElliottTerm::make(t.coefficient, t.numerator, std::move(f2)));
  out.push_back(ElliottTerm::make(-t.coefficient, t.numerator, std::move(base)));

  const ReductionMeasure before = reduction_measure(t, lambda, space);
  for (const ElliottTerm& o : out)
    if (!(reduction_measure(o, lambda, space) < before))
      throw Error(Errc::IdentityViolation, "termination measure did not decrease: " + before.to_string() + " -> " +
                                               reduction_measure(o, lambda, space).to_string());
  return out;
}

ElliottRational ct_lambda(const ElliottRational& f, int lambda, const OrderSpec& ord, const EngineOptions& opts) {
  const VariableSpace& space = f.space();
  check_lambda(space, lambda);
  std::vector<ElliottTerm> pending = orient(f, ord).terms();
  ElliottRational finished(space);
  std::size_t steps = 0;
  for (int round = 1; !pending.empty(); ++round) {
    ElliottRational next(space);
    ReductionMeasure worst;
    for (const ElliottTerm& t : pending) {
      if (!has_mixed_pair(t, lambda, space)) {
        finished.push(t);
        continue;
      }
      worst = std::max(worst, reduction_measure(t, lambda, space));
      for (ElliottTerm& o : elliott_step(t, lambda, ord, space)) next.push(std::move(o));
      ++steps;
    }
    next = canonicalize(next);
    if (next.terms().size() + finished.terms().size() > opts.term_budget)
      throw Error(Errc::TermBudgetExceeded, "live terms exceed the budget of " + std::to_string(opts.term_budget));
    if (opts.trace)
      opts.trace({lambda, round, steps, next.terms().size(), finished.terms().size(), worst});
    pending = std::move(next.terms());
  }
  finished = canonicalize(finished);
  ElliottRational out(space);
  for (const ElliottTerm& t : finished.terms()) {
    extract(t, lambda, space, out);
    if (out.terms().size() > opts.term_budget)
      throw Error(Errc::TermBudgetExceeded, "extraction exceeds the budget of " + std::to_string(opts.term_budget));
  }
  return canonicalize(out);
}

ElliottRational ct_at_zero(const ElliottRational& f, int lambda, const EngineOptions& opts) {
  return ct_lambda(f, lambda, OrderSpec::lambda_adic(lambda, LambdaEnd::AtZero), opts);
}

ElliottRational ct_at_infinity(const ElliottRational& f, int lambda, const EngineOptions& opts) {
  return ct_lambda(f, lambda, OrderSpec::lambda_adic(lambda, LambdaEnd::AtInfinity), opts);
}

ElliottRational i_operator(const ElliottRational& f, int lambda, const EngineOptions& opts) {
  return canonicalize(ct_at_zero(f, lambda, opts) + ct_at_infinity(f, lambda, opts));
}

RhoFactorization rho_factorization(const std::vector<ElliottFactor>& den, int lambda, const OrderSpec& ord,
                                   const VariableSpace& space) {
  RhoFactorization out;
  for (const ElliottFactor& f : den) {
    switch (classify_factor(f, lambda, ord, space)) {
      case FactorClass::PT: out.pt.push_back(f); break;
      case FactorClass::NT: out.nt.push_back(f); break;
      case FactorClass::LambdaFree: out.lambda_free.push_back(f); break;
    }
  }
  return out;
}

ElliottRational ct_all(const ElliottRational& f, const OrderSpec& ord, const EngineOptions& opts,
                       const std::optional<std::vector<int>>& lambda_order) {
  std::vector<int> order;
  if (lambda_order) {
    order = *lambda_order;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i || static_cast<int>(sorted.size()) != f.space().r)
        throw Error(Errc::InvalidInput, "lambda order must be a permutation of all lambdas");
  } else {
    for (int i = 0; i < f.space().r; ++i) order.push_back(i);
  }
  ElliottRational cur = f;
  for (int lambda : order) cur = ct_lambda(cur, lambda, ord, opts);
  return drop_lambdas(cur);
}

SolutionGF solution_gf(const LDSystem& sys, const OrderSpec& ord, const EngineOptions& opts) {
  return {ct_all(crude_E(sys), ord, opts), ct_all(crude_Ebar(sys), ord, opts)};
}

ElliottRational hadamard_product(const ElliottRational& f, const ElliottRational& g, const EngineOptions& opts) {
  const VariableSpace uni{0, 1};
  if (!(f.space() == uni) || !(g.space() == uni))
    throw Error(Errc::InvalidInput, "hadamard product needs univariate functions");
  const VariableSpace space{1, 1};
  // f(l): x^e -> l^e.   g(x/l): x^e -> x^e l^{-e}.
  auto embed_f = [&](const ExponentVector& e) { return ExponentVector{e[0], 0}; };
  auto embed_g = [&](const ExponentVector& e) { return ExponentVector{-e[0], e[0]}; };
  auto embed = [&](const ElliottRational& h, auto&& map) {
    ElliottRational out(space);
    for (const ElliottTerm& t : h.terms()) {
      std::vector<ElliottFactor> den;
      for (const ElliottFactor& d : t.denominator) den.push_back({map(d.monomial), d.multiplicity});
      out.push(ElliottTerm::make(t.coefficient, map(t.numerator), std::move(den)));
    }
    return out;
  };
  ElliottRational product = embed(f, embed_f) * embed(g, embed_g);
  return drop_lambdas(ct_lambda(product, 0, OrderSpec::case1(), opts));
}

}  // namespace recip

#include "recip/oracle.hpp"

#include "recip/errors.hpp"

#include <algorithm>
#include <set>

namespace recip {

SolutionSet enumerate_solutions(const LDSystem& sys, int bound, Positivity positivity) {
  if (bound < 0) throw Error(Errc::InvalidInput, "bound must be nonnegative");
  const int n = sys.n(), r = sys.r();
  const Exponent lo = positivity == Positivity::Strict ? 1 : 0;
  SolutionSet out;
  out.bound = bound;
  out.positivity = positivity;
  if (lo * n > bound) return out;

  // Per equation, the extreme coefficients among coordinates j..n-1.
  std::vector<std::vector<Exponent>> suffix_max(r, std::vector<Exponent>(n + 1, 0));
  std::vector<std::vector<Exponent>> suffix_min(r, std::vector<Exponent>(n + 1, 0));
  std::vector<std::vector<Exponent>> suffix_sum(r, std::vector<Exponent>(n + 1, 0));
  for (int k = 0; k < r; ++k)
    for (int j = n - 1; j >= 0; --j) {
      suffix_max[k][j] = std::max(suffix_max[k][j + 1], sys.A(k, j));
      suffix_min[k][j] = std::min(suffix_min[k][j + 1], sys.A(k, j));
      suffix_sum[k][j] = suffix_sum[k][j + 1] + sys.A(k, j);
    }

  std::vector<Exponent> alpha(n, 0), partial(r, 0);
  auto reachable = [&](int j, Exponent budget) {
    // Coordinates j.. are each lo plus a share of `slack` free units.
    const Exponent slack = budget - lo * (n - j);
    if (slack < 0) return false;
    for (int k = 0; k < r; ++k) {
      Exponent base = partial[k] + lo * suffix_sum[k][j];
      Exponent hi = base + slack * suffix_max[k][j];
      Exponent low = base + slack * suffix_min[k][j];
      if (sys.b(k) < low || sys.b(k) > hi) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int j, Exponent budget) -> void {
    if (!reachable(j, budget)) return;
    if (j == n) {
      out.solutions.push_back(alpha);
      return;
    }
    for (Exponent v = lo; v <= budget - lo * (n - j - 1); ++v) {
      alpha[j] = v;
      for (int k = 0; k < r; ++k) partial[k] += sys.A(k, j) * v;
      self(self, j + 1, budget - v);
      for (int k = 0; k < r; ++k) partial[k] -= sys.A(k, j) * v;
    }
    alpha[j] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

LaurentPolynomial indicator_series(const SolutionSet& s, int n) {
  LaurentPolynomial p;
  for (const auto& alpha : s.solutions) {
    if (static_cast<int>(alpha.size()) != n) throw Error(Errc::LengthMismatch, "solution length differs from n");
    p.add_term(ExponentVector(alpha), Rational(1));
  }
  return p;
}

namespace {

/// coefficients . y <= bound
struct Inequality {
  std::vector<Rational> coefficients;
  Rational bound;

  bool operator<(const Inequality& o) const {
    if (coefficients != o.coefficients)
      return std::lexicographical_compare(coefficients.begin(), coefficients.end(), o.coefficients.begin(),
                                          o.coefficients.end());
    return bound < o.bound;
  }
};

Inequality normalized(Inequality q) {
  for (const Rational& c : q.coefficients)
    if (c != 0) {
      Rational scale = c < 0 ? Rational(-c) : c;
      for (Rational& v : q.coefficients) v /= scale;
      q.bound /= scale;
      return q;
    }
  return q;
}

std::vector<Inequality> eliminate(const std::vector<Inequality>& system, int var) {
  std::vector<const Inequality*> upper, lower;
  std::set<Inequality> out;
  for (const Inequality& q : system) {
    const Rational& c = q.coefficients[var];
    if (c > 0)
      upper.push_back(&q);
    else if (c < 0)
      lower.push_back(&q);
    else
      out.insert(q);
  }
  for (const Inequality* u : upper)
    for (const Inequality* l : lower) {
      const Rational cu = u->coefficients[var], cl = -l->coefficients[var];
      Inequality q;
      q.coefficients.resize(u->coefficients.size());
      for (std::size_t i = 0; i < q.coefficients.size(); ++i)
        q.coefficients[i] = u->coefficients[i] * cl + l->coefficients[i] * cu;
      q.coefficients[var] = 0;
      q.bound = u->bound * cl + l->bound * cu;
      out.insert(normalized(std::move(q)));
    }
  return {out.begin(), out.end()};
}

}  // namespace

Feasibility has_positive_solution(const IntMatrix& A) {
  const int r = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  if (n < 1) throw Error(Errc::InvalidInput, "A has no columns");
  // alpha = 1 + beta with beta >= 0; A beta = -A 1 as two inequalities.
  std::vector<Inequality> system;
  for (int k = 0; k < r; ++k) {
    Rational rowsum = 0;
    for (int j = 0; j < n; ++j) rowsum += A(k, j);
    Inequality le, ge;
    for (int j = 0; j < n; ++j) {
      le.coefficients.push_back(Rational(A(k, j)));
      ge.coefficients.push_back(Rational(-A(k, j)));
    }
    le.bound = -rowsum;
    ge.bound = rowsum;
    system.push_back(normalized(le));
    system.push_back(normalized(ge));
  }
  for (int j = 0; j < n; ++j) {
    Inequality q;
    q.coefficients.assign(n, Rational(0));
    q.coefficients[j] = -1;
    q.bound = 0;
    system.push_back(q);
  }

  std::vector<std::vector<Inequality>> stages{system};
  for (int var = 0; var < n; ++var) stages.push_back(eliminate(stages.back(), var));
  for (const Inequality& q : stages.back())
    if (q.bound < 0) return {};

  std::vector<Rational> beta(n, Rational(0));
  for (int var = n - 1; var >= 0; --var) {
    std::optional<Rational> lowest, highest;
    for (const Inequality& q : stages[var]) {
      const Rational& c = q.coefficients[var];
      if (c == 0) continue;
      Rational rest = q.bound;
      for (int j = var + 1; j < n; ++j) rest -= q.coefficients[j] * beta[j];
      Rational v = rest / c;
      if (c > 0)
        highest = highest ? std::min(*highest, v) : v;
      else
        lowest = lowest ? std::max(*lowest, v) : v;
    }
    beta[var] = lowest ? *lowest : (highest ? *highest : Rational(0));
  }
  std::vector<Rational> alpha;
  for (const Rational& v : beta) alpha.push_back(v + 1);
  const Rational scale(clearing_multiplier(alpha));
  Feasibility out;
  out.feasible = true;
  for (const Rational& v : alpha) out.witness.push_back(numerator_of(v * scale));
  return out;
}

}  // namespace recip

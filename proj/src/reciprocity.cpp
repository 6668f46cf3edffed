#include "recip/reciprocity.hpp"

#include "recip/errors.hpp"
#include "recip/oracle.hpp"

#include <cstdlib>

namespace recip {

namespace {

ElliottRational signed_value(int exponent, const ElliottRational& f) {
  return exponent % 2 ? -f : f;
}

}  // namespace

bool semigroup_contains(const std::vector<Exponent>& generators, Exponent target) {
  if (target < 0) return false;
  if (target == 0) return true;
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (Exponent v = 1; v <= target; ++v)
    for (Exponent g : generators)
      if (g > 0 && g <= v && reach[v - g]) {
        reach[v] = 1;
        break;
      }
  return reach[target];
}

bool single_equation_r_property(const std::vector<Exponent>& a, Exponent b, bool allow_zero_row) {
  std::vector<Exponent> generators;
  Exponent positive_sum = 0, negative_sum = 0;
  for (Exponent e : a) {
    if (e == 0) continue;
    generators.push_back(std::abs(e));
    (e > 0 ? positive_sum : negative_sum) += std::abs(e);
  }
  if (generators.empty()) {
    if (!allow_zero_row) throw Error(Errc::AllZeroRow, "equation has no nonzero coefficient");
    return b != 0;
  }
  const Exponent na = -b - positive_sum;
  const Exponent nb = b - negative_sum;
  return !semigroup_contains(generators, na) && !semigroup_contains(generators, nb);
}

RPropertyResult r_property(const ElliottRational& f, const OrderSpec& ord, std::optional<int> d,
                           const EngineOptions& opts) {
  RPropertyResult out;
  out.d = d.value_or(f.space().r);
  out.ct = ct_all(f, ord, opts);
  out.ct_reversed = ct_all(f, ord.reverse(), opts);
  out.holds = equals(out.ct, signed_value(out.d, out.ct_reversed));
  return out;
}

const char* to_string(IMode m) { return m == IMode::SumLevel ? "sum" : "per-term"; }

IPropertyResult i_property(const ElliottRational& f, const OrderSpec& ord, IMode mode, const EngineOptions& opts) {
  IPropertyResult out;
  out.mode = mode;
  ElliottRational cur = f;
  for (int p = 0; p < f.space().r; ++p) {
    const std::string stage = "stage " + std::to_string(p + 1);
    if (mode == IMode::SumLevel) {
      ElliottRational value = i_operator(cur, p, opts);
      if (!is_zero(value)) {
        out.holds = false;
        out.failed_stage = p + 1;
        out.nonzero_value = value;
        out.trace.push_back(stage + ": I = " + to_string(value));
        return out;
      }
      out.trace.push_back(stage + ": I = 0");
    } else {
      for (std::size_t k = 0; k < cur.terms().size(); ++k) {
        ElliottRational single(cur.space(), {cur.terms()[k]});
        ElliottRational value = i_operator(single, p, opts);
        if (!is_zero(value)) {
          out.holds = false;
          out.failed_stage = p + 1;
          out.nonzero_value = value;
          out.trace.push_back(stage + ", term " + std::to_string(k + 1) + ": I = " + to_string(value));
          return out;
        }
      }
      out.trace.push_back(stage + ": I = 0 for all " + std::to_string(cur.terms().size()) + " terms");
    }
    cur = ct_lambda(cur, p, ord, opts);
  }
  return out;
}

PropertyReport property_report(const ElliottRational& f, const OrderSpec& ord, IMode mode, const EngineOptions& opts) {
  PropertyReport out{r_property(f, ord, std::nullopt, opts), i_property(f, ord, mode, opts)};
  if (out.i.holds && !out.r.holds)
    throw Error(Errc::IdentityViolation, "I-property holds but R-property fails");
  return out;
}

MonsterVerdict monster_check(const MatrixForm& T, const OrderSpec& ord) {
  if (exact_rank(T.body) != T.body_rows())
    throw Error(Errc::RankDeficient, "matrix form does not have full row rank");
  MonsterVerdict out;
  ContributionTrace trace;
  const auto sequences = contribution_sequences(T, ord, T.body_rows() - 1, &trace);
  out.trace = trace.notes;
  for (const ContributionSequence& seq : sequences) {
    MatrixForm reduced = sequence_ops(T, SequenceKind::RD, seq.indices);
    MonsterCheck check{seq, cleared_row(reduced, 0), false, false};
    std::vector<Exponent> a;
    bool zero_row = true;
    for (const Integer& c : check.equation.coefficients) {
      a.push_back(c.convert_to<Exponent>());
      zero_row = zero_row && c == 0;
    }
    check.degenerate = zero_row;
    if (zero_row) out.trace.push_back("sequence " + seq.to_string() + " yields an all-zero row");
    check.r_property = single_equation_r_property(a, check.equation.rhs.convert_to<Exponent>());
    if (!check.r_property && out.holds) {
      out.holds = false;
      out.failure = out.checked.size();
    }
    out.checked.push_back(std::move(check));
  }
  return out;
}

ErrorTermDecomposition error_terms(const ElliottRational& f, const OrderSpec& ord, const EngineOptions& opts) {
  const int r = f.space().r;
  const OrderSpec rev = ord.reverse();
  ErrorTermDecomposition out;
  out.lhs = ct_all(f, rev, opts);
  ElliottRational rhs = signed_value(r, ct_all(f, ord, opts));
  ElliottRational inner = f;  // CT under ord over lambdas 1..i
  for (int i = 0; i < r; ++i) {
    ElliottRational g = i_operator(inner, i, opts);
    for (int j = i + 1; j < r; ++j) g = ct_lambda(g, j, rev, opts);
    ElliottRational term = signed_value(i, drop_lambdas(g));
    rhs = rhs + term;
    out.terms.push_back(std::move(term));
    inner = ct_lambda(inner, i, ord, opts);
  }
  out.rhs = canonicalize(rhs);
  if (!equals(out.lhs, out.rhs)) throw Error(Errc::IdentityViolation, "error-term identity fails");
  return out;
}

HomogeneousReport homogeneous_reciprocity(const IntMatrix& A, const EngineOptions& opts) {
  LDSystem sys = homogeneous_system(A);
  if (rank(sys) != sys.r()) throw Error(Errc::RankDeficient, "A does not have full row rank");
  Feasibility feasible = has_positive_solution(A);
  if (!feasible.feasible) throw Error(Errc::NoPositiveSolution, "A alpha = 0 has no positive solution");
  HomogeneousReport out;
  out.positive_witness = feasible.witness;
  const OrderSpec ord = OrderSpec::case1();
  const ElliottRational crude = crude_E(sys);
  std::vector<int> all_x;
  for (int i = 0; i < sys.n(); ++i) all_x.push_back(i);
  out.E = ct_all(crude, ord, opts);
  out.Ebar = signed_value(sys.n(), ct_all(substitute_inverse(crude, all_x), ord, opts));
  if (!equals(out.Ebar, ct_all(crude_Ebar(sys), ord, opts)))
    throw Error(Errc::IdentityViolation, "the two constructions of Ebar disagree");
  out.holds = equals(out.E, signed_value(sys.n() - sys.r(), substitute_inverse_all(out.Ebar)));
  return out;
}

const char* to_string(DomainClass c) {
  switch (c) {
    case DomainClass::BothZero: return "both-zero";
    case DomainClass::BothNonzero: return "both-nonzero";
    case DomainClass::Mixed: return "mixed";
  }
  return "?";
}

DomainReport rec_domain_check(const MatrixForm& T, const OrderSpec& ord, const EngineOptions& opts) {
  for (Eigen::Index k = 0; k < T.rhs.size(); ++k)
    if (T.rhs(k) != 0) throw Error(Errc::InvalidInput, "matrix form is not homogeneous");
  if (exact_rank(T.body) != T.body_rows())
    throw Error(Errc::RankDeficient, "matrix form does not have full row rank");
  const ElliottRational f = to_elliott(T);
  DomainReport out;
  RPropertyResult r = r_property(f, ord, std::nullopt, opts);
  out.ct = r.ct;
  out.ct_reversed = r.ct_reversed;
  out.r_property = r.holds;
  const bool z = is_zero(out.ct), zr = is_zero(out.ct_reversed);
  out.classification = z && zr ? DomainClass::BothZero : (!z && !zr ? DomainClass::BothNonzero : DomainClass::Mixed);
  if (out.r_property != (out.classification != DomainClass::Mixed))
    throw Error(Errc::IdentityViolation, std::string("R-property disagrees with classification ") +
                                             to_string(out.classification));
  return out;
}

}  // namespace recip

#include "recip/elliott.hpp"

#include "recip/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace recip {

namespace {

void require_space(const ElliottRational& f, const ElliottRational& g) {
  if (!(f.space() == g.space())) throw Error(Errc::LengthMismatch, "functions live in different variable spaces");
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to certify nonzero sums quickly.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t result = 1;
  while (e) {
    if (e & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t integer_mod(const Integer& v) {
  Integer r = v % Integer(kPrime);
  if (r < 0) r += Integer(kPrime);
  return r.convert_to<std::uint64_t>();
}

struct ModPoint {
  std::vector<std::uint64_t> value;
  std::vector<std::uint64_t> inverse;

  std::uint64_t monomial(const ExponentVector& e) const {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) out = mul_mod(out, pow_mod(value[i], static_cast<std::uint64_t>(e[i])));
      if (e[i] < 0) out = mul_mod(out, pow_mod(inverse[i], static_cast<std::uint64_t>(-e[i])));
    }
    return out;
  }
};

// Returns true when the grouped sum is certainly nonzero at a random point.
// A zero result is inconclusive.
bool certified_nonzero(const std::map<std::vector<ElliottFactor>, LaurentPolynomial>& groups,
                       std::size_t slots, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(2, kPrime - 2);
  ModPoint pt;
  for (std::size_t i = 0; i < slots; ++i) {
    pt.value.push_back(pick(rng));
    pt.inverse.push_back(inv_mod(pt.value.back()));
  }
  std::uint64_t total = 0;
  for (const auto& [den, num] : groups) {
    std::uint64_t d = 1;
    for (const ElliottFactor& f : den) {
      std::uint64_t m = pt.monomial(f.monomial);
      std::uint64_t one_minus = m == 1 ? 0 : (1 + kPrime - m) % kPrime;
      if (one_minus == 0) return false;
      d = mul_mod(d, pow_mod(one_minus, static_cast<std::uint64_t>(f.multiplicity)));
    }
    std::uint64_t n = 0;
    for (const auto& [e, c] : num.terms()) {
      std::uint64_t cd = integer_mod(denominator_of(c));
      if (cd == 0) return false;
      std::uint64_t cv = mul_mod(integer_mod(numerator_of(c)), inv_mod(cd));
      n = (n + mul_mod(cv, pt.monomial(e))) % kPrime;
    }
    total = (total + mul_mod(n, inv_mod(d))) % kPrime;
  }
  return total != 0;
}

std::map<std::vector<ElliottFactor>, LaurentPolynomial> group_by_denominator(const ElliottRational& f) {
  std::map<std::vector<ElliottFactor>, LaurentPolynomial> groups;
  const OrderSpec canonical = OrderSpec::case1();
  for (const ElliottTerm& raw : f.terms()) {
    ElliottTerm t = orient_term(raw, canonical, f.space());
    groups[t.denominator].add_term(t.numerator, t.coefficient);
  }
  std::erase_if(groups, [](const auto& kv) { return kv.second.is_zero(); });
  return groups;
}

}  // namespace

ElliottTerm ElliottTerm::make(Rational coefficient, ExponentVector numerator,
                              std::vector<ElliottFactor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const ElliottFactor& a, const ElliottFactor& b) { return a.monomial < b.monomial; });
  ElliottTerm t;
  t.coefficient = std::move(coefficient);
  t.numerator = std::move(numerator);
  for (ElliottFactor& f : factors) {
    if (f.monomial.size() != t.numerator.size())
      throw Error(Errc::LengthMismatch, "factor monomial length differs from numerator");
    if (f.monomial.is_zero()) throw Error(Errc::InvalidFactor, "factor (1 - 1) vanishes");
    if (f.multiplicity <= 0) throw Error(Errc::InvalidFactor, "factor multiplicity must be positive");
    if (!t.denominator.empty() && t.denominator.back().monomial == f.monomial)
      t.denominator.back().multiplicity += f.multiplicity;
    else
      t.denominator.push_back(std::move(f));
  }
  return t;
}

int ElliottTerm::factor_count() const {
  int n = 0;
  for (const ElliottFactor& f : denominator) n += f.multiplicity;
  return n;
}

ElliottRational::ElliottRational(VariableSpace space, std::vector<ElliottTerm> terms) : space_(space) {
  for (ElliottTerm& t : terms) push(std::move(t));
}

ElliottRational ElliottRational::constant(VariableSpace space, const Rational& c) {
  return monomial(space, ExponentVector(space.size()), c);
}

ElliottRational ElliottRational::monomial(VariableSpace space, const ExponentVector& e, const Rational& c) {
  ElliottRational f(space);
  f.push(ElliottTerm::make(c, e, {}));
  return f;
}

ElliottRational ElliottRational::reciprocal(VariableSpace space, std::vector<ElliottFactor> factors) {
  ElliottRational f(space);
  f.push(ElliottTerm::make(Rational(1), ExponentVector(space.size()), std::move(factors)));
  return f;
}

void ElliottRational::push(ElliottTerm t) {
  if (static_cast<int>(t.numerator.size()) != space_.size())
    throw Error(Errc::LengthMismatch, "term does not match the variable space");
  if (t.coefficient == 0) return;
  terms_.push_back(std::move(t));
}

ElliottRational operator+(const ElliottRational& f, const ElliottRational& g) {
  require_space(f, g);
  ElliottRational out = f;
  for (const ElliottTerm& t : g.terms()) out.push(t);
  return out;
}

ElliottRational operator-(const ElliottRational& f) {
  ElliottRational out = f;
  for (ElliottTerm& t : out.terms()) t.coefficient = -t.coefficient;
  return out;
}

ElliottRational operator-(const ElliottRational& f, const ElliottRational& g) { return f + (-g); }

ElliottRational operator*(const ElliottRational& f, const ElliottRational& g) {
  require_space(f, g);
  ElliottRational out(f.space());
  for (const ElliottTerm& a : f.terms())
    for (const ElliottTerm& b : g.terms()) {
      std::vector<ElliottFactor> factors = a.denominator;
      factors.insert(factors.end(), b.denominator.begin(), b.denominator.end());
      out.push(ElliottTerm::make(a.coefficient * b.coefficient, a.numerator + b.numerator, std::move(factors)));
    }
  return out;
}

ElliottRational operator*(const Rational& c, const ElliottRational& f) {
  ElliottRational out(f.space());
  for (const ElliottTerm& t : f.terms()) {
    ElliottTerm s = t;
    s.coefficient *= c;
    out.push(std::move(s));
  }
  return out;
}

ElliottRational canonicalize(const ElliottRational& f) {
  std::map<std::pair<ExponentVector, std::vector<ElliottFactor>>, Rational> merged;
  for (const ElliottTerm& t : f.terms()) merged[{t.numerator, t.denominator}] += t.coefficient;
  ElliottRational out(f.space());
  for (auto& [key, c] : merged) {
    if (c == 0) continue;
    ElliottTerm t;
    t.coefficient = c;
    t.numerator = key.first;
    t.denominator = key.second;
    out.push(std::move(t));
  }
  return out;
}

ElliottTerm orient_term(const ElliottTerm& t, const OrderSpec& ord, const VariableSpace& space) {
  bool changed = false;
  Rational coefficient = t.coefficient;
  ExponentVector numerator = t.numerator;
  std::vector<ElliottFactor> factors;
  factors.reserve(t.denominator.size());
  for (const ElliottFactor& f : t.denominator) {
    int s = order_sign(f.monomial, ord, space);
    if (s >= 0) {
      // LambdaAdic leaves lambda-free factors (s == 0) alone.
      factors.push_back(f);
      continue;
    }
    changed = true;
    if (f.multiplicity % 2) coefficient = -coefficient;
    numerator -= f.monomial * f.multiplicity;
    factors.push_back({-f.monomial, f.multiplicity});
  }
  if (!changed) return t;
  return ElliottTerm::make(std::move(coefficient), std::move(numerator), std::move(factors));
}

ElliottRational orient(const ElliottRational& f, const OrderSpec& ord) {
  ElliottRational out(f.space());
  for (const ElliottTerm& t : f.terms()) out.push(orient_term(t, ord, f.space()));
  return out;
}

CommonForm common_denominator(const ElliottRational& f) {
  auto groups = group_by_denominator(f);
  std::map<ExponentVector, int> lcd;
  for (const auto& [den, num] : groups)
    for (const ElliottFactor& fac : den) {
      int& m = lcd[fac.monomial];
      m = std::max(m, fac.multiplicity);
    }
  CommonForm out;
  for (const auto& [mono, mult] : lcd) out.denominator.push_back({mono, mult});
  for (const auto& [den, num] : groups) {
    LaurentPolynomial scaled = num;
    std::size_t k = 0;
    for (const auto& [mono, mult] : lcd) {
      int have = 0;
      while (k < den.size() && den[k].monomial < mono) ++k;
      if (k < den.size() && den[k].monomial == mono) have = den[k].multiplicity;
      if (mult > have) scaled.multiply_binomial(mono, mult - have);
    }
    out.numerator += scaled;
  }
  return out;
}

bool is_zero(const ElliottRational& f) {
  if (f.empty()) return true;
  auto groups = group_by_denominator(f);
  if (groups.empty()) return true;
  if (certified_nonzero(groups, static_cast<std::size_t>(f.space().size()), 0x5eed1234abcdull)) return false;
  return common_denominator(f).numerator.is_zero();
}

bool equals(const ElliottRational& f, const ElliottRational& g) { return is_zero(f - g); }

ElliottRational substitute_inverse(const ElliottRational& f, const std::vector<int>& x_indices) {
  const VariableSpace& space = f.space();
  for (int i : x_indices)
    if (i < 0 || i >= space.n) throw Error(Errc::InvalidInput, "x index out of range");
  auto flip = [&](ExponentVector v) {
    for (int i : x_indices) v[space.x(i)] = -v[space.x(i)];
    return v;
  };
  ElliottRational out(space);
  for (const ElliottTerm& t : f.terms()) {
    std::vector<ElliottFactor> factors;
    for (const ElliottFactor& fac : t.denominator) factors.push_back({flip(fac.monomial), fac.multiplicity});
    out.push(ElliottTerm::make(t.coefficient, flip(t.numerator), std::move(factors)));
  }
  return out;
}

ElliottRational substitute_inverse_all(const ElliottRational& f) {
  std::vector<int> all(f.space().n);
  for (int i = 0; i < f.space().n; ++i) all[i] = i;
  return substitute_inverse(f, all);
}

LaurentPolynomial series_truncate(const ElliottRational& f, int degree) {
  const VariableSpace& space = f.space();
  LaurentPolynomial out;
  for (const ElliottTerm& t : f.terms()) {
    std::vector<Exponent> degrees;
    for (const ElliottFactor& fac : t.denominator) {
      Exponent total = 0;
      for (int s = 0; s < space.size(); ++s) {
        Exponent e = fac.monomial[s];
        if ((space.is_lambda(s) && e != 0) || e < 0)
          throw Error(Errc::NotPowerSeriesExpandable,
                      "factor (1 - " + monomial_string(fac.monomial, space) + ") is not a power-series factor");
        total += e;
      }
      if (total <= 0)
        throw Error(Errc::NotPowerSeriesExpandable, "factor of total degree zero");
      degrees.push_back(total);
    }
    for (int s = 0; s < space.r; ++s)
      if (t.numerator[s] != 0) throw Error(Errc::NotPowerSeriesExpandable, "numerator depends on a lambda");
    std::function<void(std::size_t, ExponentVector&, Exponent, const Integer&)> rec =
        [&](std::size_t j, ExponentVector& e, Exponent deg, const Integer& weight) {
          if (j == t.denominator.size()) {
            out.add_term(e, t.coefficient * Rational(weight));
            return;
          }
          const ElliottFactor& fac = t.denominator[j];
          for (Exponent k = 0; deg + k * degrees[j] <= degree; ++k) {
            rec(j + 1, e, deg + k * degrees[j], weight * negative_binomial_weight(k, fac.multiplicity));
            e += fac.monomial;
          }
          Exponent steps = degree - deg >= 0 ? (degree - deg) / degrees[j] + 1 : 0;
          e -= fac.monomial * steps;
        };
    Exponent deg0 = t.numerator.total_degree(space.r);
    if (deg0 > degree) continue;
    ExponentVector e = t.numerator;
    rec(0, e, deg0, Integer(1));
  }
  return out;
}

LaurentPolynomial expand_in_box(const ElliottRational& f, int degree) {
  const VariableSpace& space = f.space();
  const OrderSpec canonical = OrderSpec::case1();
  LaurentPolynomial out;
  for (const ElliottTerm& raw : f.terms()) {
    ElliottTerm t = orient_term(raw, canonical, space);
    for (int s = 0; s < space.r; ++s) {
      if (t.numerator[s] != 0) throw Error(Errc::NotPowerSeriesExpandable, "numerator depends on a lambda");
      for (const ElliottFactor& fac : t.denominator)
        if (fac.monomial[s] != 0) throw Error(Errc::NotPowerSeriesExpandable, "factor depends on a lambda");
    }
    // Factors grouped by leading slot; the expansion is finite slot by slot
    // from the dominant variable down.
    std::vector<std::vector<const ElliottFactor*>> by_slot(space.size());
    for (const ElliottFactor& fac : t.denominator) by_slot[fac.monomial.leading_slot()].push_back(&fac);

    std::function<void(int, ExponentVector&, Exponent, const Integer&)> slot_rec;
    std::function<void(int, std::size_t, ExponentVector&, Exponent, const Integer&)> group_rec =
        [&](int slot, std::size_t idx, ExponentVector& e, Exponent fixed_sum, const Integer& weight) {
          const auto& group = by_slot[slot];
          if (idx == group.size()) {
            Exponent v = e[slot];
            if (v < 0 || v > degree || fixed_sum + v > degree) return;
            slot_rec(slot - 1, e, fixed_sum + v, weight);
            return;
          }
          const ElliottFactor& fac = *group[idx];
          Exponent step = fac.monomial[slot];
          const Exponent base = e[slot];
          Exponent k = 0;
          for (; base + step * k <= degree; ++k) {
            if (k > 0) e += fac.monomial;
            group_rec(slot, idx + 1, e, fixed_sum, weight * negative_binomial_weight(k, fac.multiplicity));
          }
          if (k > 1) e -= fac.monomial * (k - 1);
        };
    slot_rec = [&](int slot, ExponentVector& e, Exponent fixed_sum, const Integer& weight) {
      if (slot < space.r) {
        out.add_term(e, t.coefficient * Rational(weight));
        return;
      }
      group_rec(slot, 0, e, fixed_sum, weight);
    };
    ExponentVector e = t.numerator;
    slot_rec(space.size() - 1, e, 0, Integer(1));
  }
  return out;
}

ElliottRational drop_lambdas(const ElliottRational& f) {
  const VariableSpace& space = f.space();
  VariableSpace xs{0, space.n};
  auto strip = [&](const ExponentVector& v) {
    for (int s = 0; s < space.r; ++s)
      if (v[s] != 0) throw Error(Errc::InvalidInput, "function still depends on a lambda");
    return ExponentVector(std::vector<Exponent>(v.entries().begin() + space.r, v.entries().end()));
  };
  ElliottRational out(xs);
  for (const ElliottTerm& t : f.terms()) {
    std::vector<ElliottFactor> factors;
    for (const ElliottFactor& fac : t.denominator) factors.push_back({strip(fac.monomial), fac.multiplicity});
    out.push(ElliottTerm::make(t.coefficient, strip(t.numerator), std::move(factors)));
  }
  return out;
}

ElliottRational lift_to(const ElliottRational& f, const VariableSpace& space) {
  if (f.space().r != 0 || f.space().n != space.n)
    throw Error(Errc::LengthMismatch, "can only lift an x-only function with matching n");
  auto widen = [&](const ExponentVector& v) {
    std::vector<Exponent> e(space.r, 0);
    e.insert(e.end(), v.entries().begin(), v.entries().end());
    return ExponentVector(std::move(e));
  };
  ElliottRational out(space);
  for (const ElliottTerm& t : f.terms()) {
    std::vector<ElliottFactor> factors;
    for (const ElliottFactor& fac : t.denominator) factors.push_back({widen(fac.monomial), fac.multiplicity});
    out.push(ElliottTerm::make(t.coefficient, widen(t.numerator), std::move(factors)));
  }
  return out;
}

std::string term_string(const ElliottTerm& t, const VariableSpace& space) {
  std::string out;
  std::string mono = monomial_string(t.numerator, space);
  if (t.coefficient == 1)
    out = mono;
  else if (t.coefficient == -1)
    out = "-" + mono;
  else {
    std::string c = is_integer(t.coefficient) ? to_string(t.coefficient) : "(" + to_string(t.coefficient) + ")";
    out = c + (mono == "1" ? "" : "*" + mono);
  }
  if (t.denominator.empty()) return out;
  std::string den;
  for (const ElliottFactor& f : t.denominator) {
    if (!den.empty()) den += '*';
    den += "(1-" + monomial_string(f.monomial, space) + ")";
    if (f.multiplicity != 1) den += "^" + std::to_string(f.multiplicity);
  }
  if (t.denominator.size() == 1 && t.denominator[0].multiplicity == 1) return out + "/" + den;
  return out + "/(" + den + ")";
}

std::string to_string(const ElliottRational& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const ElliottTerm& t : f.terms()) {
    std::string s = term_string(t, f.space());
    if (out.empty())
      out = s;
    else if (s.front() == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

}  // namespace recip

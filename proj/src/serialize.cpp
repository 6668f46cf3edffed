#include "recip/serialize.hpp"

#include "recip/errors.hpp"

#include <cctype>
#include <string>

namespace recip {

namespace {

Json exponents_json(const ExponentVector& e) { return Json(e.entries()); }

ExponentVector exponents_from(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size)
    throw Error(Errc::InvalidInput, where + ": expected an array of " + std::to_string(size) + " integers");
  ExponentVector e(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (!j[i].is_number_integer()) throw Error(Errc::InvalidInput, where + ": entries must be integers");
    e[i] = j[i].get<Exponent>();
  }
  return e;
}

Json functions_json(const std::vector<ElliottRational>& fs) {
  Json out = Json::array();
  for (const ElliottRational& f : fs) out.push_back(to_string(f));
  return out;
}

}  // namespace

Json to_json(const ElliottRational& f) {
  Json terms = Json::array();
  for (const ElliottTerm& t : f.terms()) {
    Json den = Json::array();
    for (const ElliottFactor& d : t.denominator) den.push_back({{"mono", exponents_json(d.monomial)}, {"mult", d.multiplicity}});
    terms.push_back({{"coef", to_string(t.coefficient)}, {"num", exponents_json(t.numerator)}, {"den", den}});
  }
  return {{"r", f.space().r}, {"n", f.space().n}, {"terms", terms}};
}

ElliottRational elliott_from_json(const Json& j) {
  try {
    VariableSpace space{j.at("r").get<int>(), j.at("n").get<int>()};
    check_space(space);
    const std::size_t size = space.size();
    ElliottRational f(space);
    for (const Json& t : j.at("terms")) {
      std::vector<ElliottFactor> den;
      for (const Json& d : t.at("den"))
        den.push_back({exponents_from(d.at("mono"), size, "den.mono"), d.at("mult").get<int>()});
      f.push(ElliottTerm::make(parse_rational(t.at("coef").get<std::string>()), exponents_from(t.at("num"), size, "num"),
                               std::move(den)));
    }
    return f;
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed function document: ") + e.what());
  }
}

Json series_json(const LaurentPolynomial& p, const VariableSpace& space) {
  Json out = Json::array();
  for (const auto& [e, c] : p.sorted())
    out.push_back({{"mono", monomial_string(e, space)}, {"exp", exponents_json(e)}, {"coef", to_string(c)}});
  return out;
}

SystemDocument parse_system_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::InvalidInput, std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::InvalidInput, "input must be an object with field \"A\"");
  if (!doc.contains("A") || !doc["A"].is_array() || doc["A"].empty())
    throw Error(Errc::InvalidInput, "field \"A\": expected a nonempty array of rows");
  const Json& rows = doc["A"];
  const std::size_t r = rows.size();
  if (!rows[0].is_array() || rows[0].empty()) throw Error(Errc::InvalidInput, "field \"A\" row 1: expected a nonempty array");
  const std::size_t n = rows[0].size();
  IntMatrix A(r, n);
  for (std::size_t k = 0; k < r; ++k) {
    const std::string where = "field \"A\" row " + std::to_string(k + 1);
    if (!rows[k].is_array() || rows[k].size() != n)
      throw Error(Errc::InvalidInput, where + ": expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[k][j].is_number_integer())
        throw Error(Errc::InvalidInput, where + " entry " + std::to_string(j + 1) + ": expected an integer");
      A(k, j) = rows[k][j].get<Exponent>();
    }
  }
  IntVector b = IntVector::Zero(r);
  if (doc.contains("b")) {
    const Json& jb = doc["b"];
    if (!jb.is_array() || jb.size() != r)
      throw Error(Errc::InvalidInput, "field \"b\": expected " + std::to_string(r) + " integers");
    for (std::size_t k = 0; k < r; ++k) {
      if (!jb[k].is_number_integer())
        throw Error(Errc::InvalidInput, "field \"b\" entry " + std::to_string(k + 1) + ": expected an integer");
      b(k) = jb[k].get<Exponent>();
    }
  }
  SystemDocument out{make_system(A, b), std::nullopt};
  if (doc.contains("b_ranges")) {
    const Json& jr = doc["b_ranges"];
    if (!jr.is_array() || jr.size() != r)
      throw Error(Errc::InvalidInput, "field \"b_ranges\": expected " + std::to_string(r) + " [lo, hi] pairs");
    std::vector<std::pair<Exponent, Exponent>> ranges;
    for (std::size_t k = 0; k < r; ++k) {
      const Json& p = jr[k];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw Error(Errc::InvalidInput, "field \"b_ranges\" entry " + std::to_string(k + 1) + ": expected [lo, hi]");
      ranges.emplace_back(p[0].get<Exponent>(), p[1].get<Exponent>());
    }
    out.b_ranges = std::move(ranges);
  }
  return out;
}

namespace {

const VariableSpace kUni{0, 1};

/// Parsed value; `binomials` is set while the value is a product of (1 - x^k) factors.
struct Value {
  ElliottRational f{kUni};
  std::optional<std::vector<ElliottFactor>> binomials;
};

class UnivariateParser {
 public:
  explicit UnivariateParser(std::string text) : s_(std::move(text)) {}

  ElliottRational parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return canonicalize(v.f);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::InvalidInput, "expression: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Exponent integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  static Value plain(ElliottRational f) { return {std::move(f), std::nullopt}; }

  static std::optional<std::vector<ElliottFactor>> as_binomial(const ElliottRational& f) {
    ElliottRational c = canonicalize(f);
    if (c.terms().size() != 2) return std::nullopt;
    const ElliottTerm* one = nullptr;
    const ElliottTerm* other = nullptr;
    for (const ElliottTerm& t : c.terms()) {
      if (!t.denominator.empty()) return std::nullopt;
      if (t.numerator.is_zero() && t.coefficient == 1)
        one = &t;
      else
        other = &t;
    }
    if (!one || !other || other->coefficient != -1) return std::nullopt;
    return std::vector<ElliottFactor>{{other->numerator, 1}};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = plain(v.f + term().f);
      else if (accept('-'))
        v = plain(v.f - term().f);
      else
        break;
    }
    if (!v.binomials) v.binomials = as_binomial(v.f);
    return v;
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (accept('*')) {
        Value w = factor();
        Value p = plain(v.f * w.f);
        if (v.binomials && w.binomials) {
          p.binomials = *v.binomials;
          p.binomials->insert(p.binomials->end(), w.binomials->begin(), w.binomials->end());
        }
        v = std::move(p);
      } else if (accept('/')) {
        v = plain(v.f * reciprocal(factor()));
      } else {
        break;
      }
    }
    return v;
  }

  ElliottRational reciprocal(const Value& d) {
    if (d.binomials) return ElliottRational::reciprocal(kUni, *d.binomials);
    ElliottRational c = canonicalize(d.f);
    if (c.terms().size() == 1 && c.terms()[0].denominator.empty() && c.terms()[0].coefficient != 0) {
      const ElliottTerm& t = c.terms()[0];
      return ElliottRational::monomial(kUni, -t.numerator, Rational(1) / t.coefficient);
    }
    fail("divisor must be a monomial or a product of (1-x^k) factors");
  }

  Value factor() {
    if (accept('-')) {
      Value v = factor();
      return plain(-v.f);
    }
    Value v = primary();
    if (accept('^')) {
      Exponent k = integer();
      Value p = plain(ElliottRational::constant(kUni, Rational(1)));
      for (Exponent i = 0; i < k; ++i) p.f = p.f * v.f;
      if (v.binomials) {
        p.binomials.emplace();
        for (const ElliottFactor& b : *v.binomials)
          if (k > 0) p.binomials->push_back({b.monomial, b.multiplicity * static_cast<int>(k)});
      }
      v = std::move(p);
    }
    return v;
  }

  Value primary() {
    skip();
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return plain(ElliottRational::constant(kUni, Rational(integer())));
    if (accept('x')) {
      Exponent e = 1;
      if (accept('^')) {
        bool negative = accept('-');
        e = integer();
        if (negative) e = -e;
      }
      return plain(ElliottRational::monomial(kUni, ExponentVector{e}));
    }
    fail("expected a number, x or '('");
  }
};

}  // namespace

ElliottRational parse_univariate(std::string_view text) {
  std::string s(text);
  const std::string minus = "\xE2\x88\x92";
  for (std::size_t p; (p = s.find(minus)) != std::string::npos;) s.replace(p, minus.size(), "-");
  return UnivariateParser(std::move(s)).parse();
}

Json to_json(const RPropertyResult& r) {
  return {{"holds", r.holds}, {"d", r.d}, {"ct", to_string(r.ct)}, {"ct_reversed", to_string(r.ct_reversed)}};
}

Json to_json(const IPropertyResult& i) {
  Json out{{"holds", i.holds}, {"mode", to_string(i.mode)}, {"failed_stage", i.failed_stage}};
  out["nonzero_value"] = i.nonzero_value ? Json(to_string(*i.nonzero_value)) : Json(nullptr);
  out["trace"] = i.trace;
  return out;
}

Json to_json(const MonsterVerdict& m) {
  Json checks = Json::array();
  for (const MonsterCheck& c : m.checked)
    checks.push_back({{"sequence", c.sequence.to_string()},
                      {"equation", c.equation.to_string()},
                      {"r_property", c.r_property},
                      {"degenerate", c.degenerate}});
  Json out{{"holds", m.holds}, {"checked", checks}};
  out["failure"] = m.failure ? Json(m.checked[*m.failure].sequence.to_string()) : Json(nullptr);
  out["trace"] = m.trace;
  return out;
}

Json to_json(const ErrorTermDecomposition& e) {
  return {{"terms", functions_json(e.terms)}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}, {"verified", true}};
}

Json to_json(const HomogeneousReport& h) {
  Json witness = Json::array();
  for (const Integer& w : h.positive_witness) witness.push_back(w.str());
  return {{"holds", h.holds}, {"E", to_string(h.E)}, {"Ebar", to_string(h.Ebar)}, {"positive_witness", witness}};
}

Json to_json(const DomainReport& d) {
  return {{"classification", to_string(d.classification)},
          {"r_property", d.r_property},
          {"ct", to_string(d.ct)},
          {"ct_reversed", to_string(d.ct_reversed)}};
}

Json to_json(const SolutionSet& s) {
  return {{"bound", s.bound},
          {"positivity", s.positivity == Positivity::Strict ? "strict" : "nonneg"},
          {"count", s.solutions.size()},
          {"solutions", s.solutions}};
}

Json to_json(const Feasibility& f) {
  Json witness = Json::array();
  for (const Integer& w : f.witness) witness.push_back(w.str());
  Json out{{"feasible", f.feasible}};
  out["witness"] = f.feasible ? witness : Json(nullptr);
  return out;
}

Json to_json(const GridSummary& s) {
  return {{"points", s.points},       {"R", s.r_count},
          {"I", s.i_count},           {"monster", s.monster_count},
          {"errors", s.errors},       {"I_subset_R", s.i_subset_r},
          {"monster_subset_R", s.monster_subset_r}};
}

}  // namespace recip

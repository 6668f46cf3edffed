#include "recip/rational.hpp"

#include "recip/errors.hpp"

namespace recip {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::SingularOrder: return "SingularOrder";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::InvalidFactor: return "InvalidFactor";
    case Errc::NotOriented: return "NotOriented";
    case Errc::NoMixedPair: return "NoMixedPair";
    case Errc::NotPowerSeriesExpandable: return "NotPowerSeriesExpandable";
    case Errc::TermBudgetExceeded: return "TermBudgetExceeded";
    case Errc::ZeroPivot: return "ZeroPivot";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NoPositiveSolution: return "NoPositiveSolution";
    case Errc::AllZeroRow: return "AllZeroRow";
    case Errc::IdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  Integer num = numerator_of(q);
  Integer den = denominator_of(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(Errc::InvalidInput, "malformed rational '" + s + "'");
  }
}

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }
bool is_integer(const Rational& q) { return denominator_of(q) == 1; }
int sign(const Rational& q) { return q.sign(); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= Integer(n - k + i);
    result /= Integer(i);
  }
  return result;
}

Integer negative_binomial_weight(std::int64_t k, std::int64_t mult) {
  if (mult == 1) return Integer(1);
  return binomial(k + mult - 1, mult - 1);
}

Integer clearing_multiplier(const std::vector<Rational>& values) {
  Integer l(1);
  for (const Rational& v : values) l = boost::multiprecision::lcm(l, denominator_of(v));
  return l;
}

}  // namespace recip

#include "recip/ldsystem.hpp"

#include "recip/errors.hpp"

namespace recip {

LDSystem make_system(IntMatrix A, IntVector b) {
  if (A.rows() < 1 || A.cols() < 1) throw Error(Errc::InvalidInput, "A must have at least one row and one column");
  if (b.size() != A.rows()) throw Error(Errc::InvalidInput, "b must have one entry per row of A");
  return {std::move(A), std::move(b)};
}

LDSystem homogeneous_system(IntMatrix A) {
  IntVector b = IntVector::Zero(A.rows());
  return make_system(std::move(A), std::move(b));
}

Eigen::Index rank(const LDSystem& sys) { return exact_rank(sys.A); }

namespace {

ExponentVector column_monomial(const LDSystem& sys, int i) {
  const VariableSpace space = sys.space();
  ExponentVector m(space.size());
  for (int k = 0; k < sys.r(); ++k) m[space.lambda(k)] = sys.A(k, i);
  m[space.x(i)] = 1;
  return m;
}

std::vector<ElliottFactor> column_factors(const LDSystem& sys) {
  std::vector<ElliottFactor> factors;
  for (int i = 0; i < sys.n(); ++i) factors.push_back({column_monomial(sys, i), 1});
  return factors;
}

}  // namespace

ElliottRational crude_E(const LDSystem& sys) {
  const VariableSpace space = sys.space();
  ExponentVector num(space.size());
  for (int k = 0; k < sys.r(); ++k) num[space.lambda(k)] = -sys.b(k);
  ElliottRational f(space);
  f.push(ElliottTerm::make(Rational(1), std::move(num), column_factors(sys)));
  return f;
}

ElliottRational crude_Ebar(const LDSystem& sys) {
  const VariableSpace space = sys.space();
  ExponentVector num(space.size());
  for (int k = 0; k < sys.r(); ++k) num[space.lambda(k)] = sys.b(k);
  for (int i = 0; i < sys.n(); ++i) num += column_monomial(sys, i);
  ElliottRational f(space);
  f.push(ElliottTerm::make(Rational(1), std::move(num), column_factors(sys)));
  return f;
}

}  // namespace recip

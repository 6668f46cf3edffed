#pragma once

#include "recip/elliott.hpp"
#include "recip/ldsystem.hpp"

#include <ostream>
#include <vector>

namespace recip {

inline void PrintTo(const LaurentPolynomial& p, std::ostream* os) {
  bool first = true;
  for (const auto& [e, c] : p.sorted()) {
    *os << (first ? "" : " + ") << c << "*[";
    for (std::size_t i = 0; i < e.size(); ++i) *os << (i ? "," : "") << e[i];
    *os << "]";
    first = false;
  }
  if (first) *os << "0";
}

}  // namespace recip

namespace recip::testing {

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<Exponent>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Exponent v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntVector int_vector(std::initializer_list<Exponent> v) {
  IntVector out(v.size());
  Eigen::Index i = 0;
  for (Exponent e : v) out(i++) = e;
  return out;
}

inline LDSystem example_system(Exponent b, Exponent c) {
  return make_system(int_matrix({{3, -1, -2}, {-1, 1, -1}}), int_vector({b, c}));
}

/// Visits every alpha in N^n with |alpha| <= bound (no pruning).
template <typename F>
void for_each_box_point(int n, int bound, Exponent lo, F&& visit) {
  std::vector<Exponent> alpha(n, lo);
  auto rec = [&](auto&& self, int j, Exponent used) -> void {
    if (j == n) {
      visit(alpha);
      return;
    }
    for (Exponent v = lo; used + v + lo * (n - 1 - j) <= bound; ++v) {
      alpha[j] = v;
      self(self, j + 1, used + v);
    }
    alpha[j] = lo;
  };
  rec(rec, 0, 0);
}

/// Indicator polynomial of {alpha : A alpha = b, |alpha| <= bound}, by plain search.
inline LaurentPolynomial naive_indicator(const IntMatrix& A, const IntVector& b, int bound, bool strict) {
  LaurentPolynomial p;
  const int n = static_cast<int>(A.cols());
  if (strict && n > bound) return p;
  for_each_box_point(n, bound, strict ? 1 : 0, [&](const std::vector<Exponent>& alpha) {
    for (Eigen::Index k = 0; k < A.rows(); ++k) {
      Exponent s = 0;
      for (int j = 0; j < n; ++j) s += A(k, j) * alpha[j];
      if (s != b(k)) return;
    }
    p.add_term(ExponentVector(alpha), Rational(1));
  });
  return p;
}

/// F = l^c / prod_i (1 - l^{a_i} x_i) under case 1: each factor expands as a
/// geometric series in l^{a_i} x_i, so CT = sum over k >= 0 with a.k = -c of x^k.
/// Under the reversed order CT = (-1)^n sum over k >= 1 with a.k = c of x^{-k};
/// the latter is returned with x inverted.
inline LaurentPolynomial single_lambda_oracle(const std::vector<Exponent>& a, Exponent c, int bound, bool reversed) {
  LaurentPolynomial p;
  const int n = static_cast<int>(a.size());
  if (reversed && n > bound) return p;
  const Rational sign = reversed && n % 2 ? Rational(-1) : Rational(1);
  for_each_box_point(n, bound, reversed ? 1 : 0, [&](const std::vector<Exponent>& k) {
    Exponent s = 0;
    for (int j = 0; j < n; ++j) s += a[j] * k[j];
    if (s == (reversed ? c : -c)) p.add_term(ExponentVector(k), sign);
  });
  return p;
}

inline ElliottRational single_lambda_function(const std::vector<Exponent>& a, Exponent c) {
  const VariableSpace space{1, static_cast<int>(a.size())};
  std::vector<ElliottFactor> den;
  for (int i = 0; i < space.n; ++i) {
    ExponentVector m(space.size());
    m[0] = a[i];
    m[space.x(i)] = 1;
    den.push_back({m, 1});
  }
  ExponentVector num(space.size());
  num[0] = c;
  return ElliottRational(space, {ElliottTerm::make(Rational(1), num, den)});
}

inline ElliottRational x_function(int n, std::initializer_list<std::pair<std::vector<Exponent>, int>> factors,
                                  std::vector<Exponent> numerator = {}, Rational coefficient = Rational(1)) {
  const VariableSpace space{0, n};
  std::vector<ElliottFactor> den;
  for (const auto& [m, mult] : factors) den.push_back({ExponentVector(m), mult});
  if (numerator.empty()) numerator.assign(n, 0);
  return ElliottRational(space, {ElliottTerm::make(coefficient, ExponentVector(numerator), den)});
}

}  // namespace recip::testing

#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace recip {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);
bool is_integer(const Rational& q);
int sign(const Rational& q);

/// C(n, k) for n >= 0; zero when k is out of range.
Integer binomial(std::int64_t n, std::int64_t k);

/// Coefficient of m^k in (1 - m)^{-mult}, i.e. C(k + mult - 1, mult - 1).
Integer negative_binomial_weight(std::int64_t k, std::int64_t mult);

/// Positive lcm of all denominators; multiplying by it clears the vector.
Integer clearing_multiplier(const std::vector<Rational>& values);

template <typename Scalar>
RatMatrix to_rational(const Matrix<Scalar>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Exact row echelon reduction; returns the rank and leaves `m` in echelon form.
template <typename Derived>
Eigen::Index exact_rank_inplace(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = rank; row < m.rows(); ++row)
      if (m(row, col) != Scalar(0)) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index row = rank + 1; row < m.rows(); ++row) {
      if (m(row, col) == Scalar(0)) continue;
      Scalar factor = m(row, col) / m(rank, col);
      for (Eigen::Index k = col; k < m.cols(); ++k) m(row, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix work(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) work(i, j) = Rational(m(i, j));
  return exact_rank_inplace(work);
}

template <typename Derived>
Rational exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix work(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) work(i, j) = Rational(m(i, j));
  Rational det(1);
  const Eigen::Index n = work.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row)
      if (work(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      work.row(col).swap(work.row(pivot));
      det = -det;
    }
    det *= work(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (work(row, col) == 0) continue;
      Rational factor = work(row, col) / work(col, col);
      for (Eigen::Index k = col; k < n; ++k) work(row, k) -= factor * work(col, k);
    }
  }
  return det;
}

}  // namespace recip

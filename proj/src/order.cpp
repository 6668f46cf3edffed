#include "recip/order.hpp"

#include "recip/errors.hpp"

namespace recip {

namespace {

int last_nonzero_sign(const std::vector<Exponent>& v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (*it != 0) return *it > 0 ? 1 : -1;
  return 0;
}

int raw_sign(const ExponentVector& v, const OrderSpec& ord, const VariableSpace& space) {
  switch (ord.kind) {
    case OrderKind::Case1Identity:
      return last_nonzero_sign(v.entries());
    case OrderKind::Case2TotalDegree: {
      // image in (l_r..l_1 | x_1..x_n | t), compared with the last slot dominant
      Exponent t = v.total_degree(space.r);
      if (t != 0) return t > 0 ? 1 : -1;
      for (int i = space.n - 1; i >= 0; --i) {
        Exponent e = v[space.x(i)];
        if (e != 0) return e > 0 ? 1 : -1;
      }
      for (int i = 0; i < space.r; ++i) {
        Exponent e = v[space.lambda(i)];
        if (e != 0) return e > 0 ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::Matrix: {
      std::vector<Exponent> image(v.size(), 0);
      for (Eigen::Index i = 0; i < ord.rho.rows(); ++i) {
        Exponent s = 0;
        for (Eigen::Index j = 0; j < ord.rho.cols(); ++j) s += ord.rho(i, j) * v[j];
        image[i] = s;
      }
      return last_nonzero_sign(image);
    }
    case OrderKind::LambdaAdic: {
      Exponent e = v[space.lambda(ord.lambda)];
      int s = e == 0 ? 0 : (e > 0 ? 1 : -1);
      return ord.end == LambdaEnd::AtZero ? s : -s;
    }
  }
  return 0;
}

}  // namespace

Cmp flip(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return Cmp::Equal;
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "Less";
    case Cmp::Equal: return "Equal";
    case Cmp::Greater: return "Greater";
  }
  return "?";
}

OrderSpec OrderSpec::case2() {
  OrderSpec o;
  o.kind = OrderKind::Case2TotalDegree;
  return o;
}

OrderSpec OrderSpec::matrix(IntMatrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw Error(Errc::SingularOrder, "rho must be a nonempty square matrix");
  if (exact_determinant(rho) == 0) throw Error(Errc::SingularOrder, "rho is singular");
  OrderSpec o;
  o.kind = OrderKind::Matrix;
  o.rho = std::move(rho);
  return o;
}

OrderSpec OrderSpec::lambda_adic(int lambda, LambdaEnd end) {
  OrderSpec o;
  o.kind = OrderKind::LambdaAdic;
  o.lambda = lambda;
  o.end = end;
  return o;
}

bool OrderSpec::maps_blocks(const VariableSpace& space) const {
  switch (kind) {
    case OrderKind::Case1Identity:
    case OrderKind::Case2TotalDegree:
      return true;
    case OrderKind::LambdaAdic:
      return false;
    case OrderKind::Matrix:
      for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j)
          if (rho(i, j) != 0 && space.is_lambda(i) != space.is_lambda(j)) return false;
      return true;
  }
  return false;
}

std::string OrderSpec::describe() const {
  std::string base;
  switch (kind) {
    case OrderKind::Case1Identity: base = "case1"; break;
    case OrderKind::Case2TotalDegree: base = "case2"; break;
    case OrderKind::Matrix: base = "matrix"; break;
    case OrderKind::LambdaAdic:
      base = "l" + std::to_string(lambda + 1) + (end == LambdaEnd::AtZero ? "@0" : "@inf");
      break;
  }
  return reversed ? base + "-reversed" : base;
}

int order_sign(const ExponentVector& v, const OrderSpec& ord, const VariableSpace& space) {
  if (static_cast<int>(v.size()) != space.size())
    throw Error(Errc::LengthMismatch, "exponent vector does not match the variable space");
  if (ord.kind == OrderKind::Matrix && ord.rho.rows() != space.size())
    throw Error(Errc::LengthMismatch, "rho does not match the variable space");
  int s = raw_sign(v, ord, space);
  return ord.reversed ? -s : s;
}

Cmp compare(const ExponentVector& a, const ExponentVector& b, const OrderSpec& ord,
            const VariableSpace& space) {
  if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "compared vectors differ in length");
  int s = order_sign(b - a, ord, space);
  if (s > 0) return Cmp::Less;
  if (s < 0) return Cmp::Greater;
  return Cmp::Equal;
}

}  // namespace recip

#include "recip/matrix_form.hpp"

#include "recip/errors.hpp"

#include <algorithm>
#include <sstream>

namespace recip {

int MatrixForm::position_of(int original_column) const {
  auto it = std::find(columns.begin(), columns.end(), original_column);
  if (it == columns.end())
    throw Error(Errc::InvalidInput, "column " + std::to_string(original_column + 1) + " is not present");
  return static_cast<int>(it - columns.begin());
}

MatrixForm matrix_form(const LDSystem& sys) {
  MatrixForm T;
  T.space = sys.space();
  const int n = sys.n();
  for (int i = 0; i < n; ++i) {
    RatVector e = RatVector::Zero(n);
    e(i) = 1;
    T.top.push_back(e);
    T.columns.push_back(i);
  }
  T.top_numerator = RatVector::Zero(n);
  T.body = to_rational(sys.A);
  T.rhs.resize(sys.r());
  for (int k = 0; k < sys.r(); ++k) {
    T.rhs(k) = Rational(sys.b(k));
    T.rows.push_back(k);
  }
  return T;
}

namespace {

const Rational& pivot_at(const MatrixForm& T, int row, int p) {
  if (row < 0 || row >= T.body_rows()) throw Error(Errc::InvalidInput, "pivot row out of range");
  const Rational& a = T.body(row, p);
  if (a == 0)
    throw Error(Errc::ZeroPivot, "entry (" + std::to_string(row + 2) + "," + std::to_string(T.columns[p] + 1) +
                                     ") is zero");
  return a;
}

}  // namespace

MatrixForm col_eliminate(const MatrixForm& T, int original_column, int row) {
  MatrixForm out = T;
  const int p = T.position_of(original_column);
  const Rational piv = pivot_at(T, row, p);
  for (int j = 0; j < T.cols(); ++j) {
    if (j == p || T.body(row, j) == 0) continue;
    Rational f = -T.body(row, j) / piv;
    out.body.col(j) += f * T.body.col(p);
    out.top[j] += f * T.top[p];
  }
  if (T.rhs(row) != 0) {
    Rational f = -T.rhs(row) / piv;
    out.rhs += f * T.body.col(p);
    out.top_numerator += f * T.top[p];
  }
  return out;
}

MatrixForm row_eliminate(const MatrixForm& T, int original_column, int row) {
  MatrixForm out = T;
  const int p = T.position_of(original_column);
  const Rational piv = pivot_at(T, row, p);
  for (int k = row + 1; k < T.body_rows(); ++k) {
    if (T.body(k, p) == 0) continue;
    Rational f = T.body(k, p) / piv;
    out.body.row(k) -= f * T.body.row(row);
    out.rhs(k) -= f * T.rhs(row);
  }
  return out;
}

MatrixForm delete_pivot(const MatrixForm& T, int original_column) {
  if (T.body_rows() == 0) throw Error(Errc::InvalidInput, "no body row left to delete");
  const int p = T.position_of(original_column);
  MatrixForm out;
  out.space = T.space;
  out.scalar = T.scalar;
  out.top_numerator = T.top_numerator;
  const int rows = T.body_rows() - 1;
  const int cols = T.cols() - 1;
  out.body.resize(rows, cols);
  out.rhs.resize(rows);
  for (int k = 0; k < rows; ++k) {
    out.rhs(k) = T.rhs(k + 1);
    for (int j = 0, jj = 0; j < T.cols(); ++j) {
      if (j == p) continue;
      out.body(k, jj++) = T.body(k + 1, j);
    }
  }
  for (int j = 0; j < T.cols(); ++j) {
    if (j == p) continue;
    out.top.push_back(T.top[j]);
    out.columns.push_back(T.columns[j]);
  }
  out.rows.assign(T.rows.begin() + 1, T.rows.end());
  return out;
}

MatrixForm sequence_ops(const MatrixForm& T, SequenceKind kind, const std::vector<int>& original_columns) {
  MatrixForm cur = T;
  for (std::size_t s = 0; s < original_columns.size(); ++s) {
    const int col = original_columns[s];
    try {
      switch (kind) {
        case SequenceKind::R:
          cur = row_eliminate(cur, col, static_cast<int>(s));
          break;
        case SequenceKind::RC:
          cur = col_eliminate(row_eliminate(cur, col, static_cast<int>(s)), col, static_cast<int>(s));
          break;
        case SequenceKind::CD:
          cur = delete_pivot(col_eliminate(cur, col, 0), col);
          break;
        case SequenceKind::RD:
          cur = delete_pivot(row_eliminate(cur, col, 0), col);
          break;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::ZeroPivot) throw;
      throw Error(Errc::ZeroPivot, "step " + std::to_string(s + 1) + ": " + e.what());
    }
  }
  return cur;
}

ElliottRational to_elliott(const MatrixForm& T) {
  const VariableSpace space = T.space;
  auto integral = [](const Rational& q) {
    if (!is_integer(q)) throw Error(Errc::InvalidInput, "matrix form has fractional entries");
    return numerator_of(q).convert_to<Exponent>();
  };
  ExponentVector num(space.size());
  for (int k = 0; k < T.body_rows(); ++k) num[space.lambda(T.rows[k])] = -integral(T.rhs(k));
  for (int i = 0; i < space.n; ++i) num[space.x(i)] = integral(T.top_numerator(i));
  std::vector<ElliottFactor> factors;
  for (int j = 0; j < T.cols(); ++j) {
    ExponentVector m(space.size());
    for (int k = 0; k < T.body_rows(); ++k) m[space.lambda(T.rows[k])] = integral(T.body(k, j));
    for (int i = 0; i < space.n; ++i) m[space.x(i)] = integral(T.top[j](i));
    factors.push_back({std::move(m), 1});
  }
  ElliottRational f(space);
  f.push(ElliottTerm::make(T.scalar, std::move(num), std::move(factors)));
  return f;
}

LinearEquation cleared_row(const MatrixForm& T, int row) {
  if (row < 0 || row >= T.body_rows()) throw Error(Errc::InvalidInput, "row out of range");
  std::vector<Rational> values;
  for (int j = 0; j < T.cols(); ++j) values.push_back(T.body(row, j));
  values.push_back(T.rhs(row));
  const Rational scale(clearing_multiplier(values));
  LinearEquation eq;
  eq.columns = T.columns;
  for (int j = 0; j < T.cols(); ++j) eq.coefficients.push_back(numerator_of(T.body(row, j) * scale));
  eq.rhs = numerator_of(T.rhs(row) * scale);
  return eq;
}

std::string LinearEquation::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Integer& c = coefficients[j];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    std::string var = "a" + std::to_string(columns[j] + 1);
    std::string body = mag == 1 ? var : mag.str() + "*" + var;
    if (out.empty())
      out = c < 0 ? "-" + body : body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  if (out.empty()) out = "0";
  return out + " = " + rhs.str();
}

std::string ContributionSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i] + 1);
  }
  return out + ")";
}

bool contributes(const RatVector& y, const Rational& pivot, int lambda_index, const OrderSpec& ord,
                 const VariableSpace& space) {
  if (pivot == 0) return false;
  std::vector<Rational> entries(y.data(), y.data() + y.size());
  const Integer scale = clearing_multiplier(entries);
  const Exponent d = scale.convert_to<Exponent>();
  const Exponent s = pivot > 0 ? -1 : 1;  // sign(-pivot)
  ExponentVector lhs(space.size());
  for (int i = 0; i < space.n; ++i) lhs[space.x(i)] = s * numerator_of(y(i) * Rational(scale)).convert_to<Exponent>();
  ExponentVector rhs = ExponentVector::unit(space.size(), space.lambda(lambda_index), d);
  return compare(lhs, rhs, ord, space) == Cmp::Less;
}

std::vector<ContributionSequence> contribution_sequences(const MatrixForm& T, const OrderSpec& ord,
                                                         int max_length, ContributionTrace* trace) {
  if (!ord.maps_blocks(T.space))
    throw Error(Errc::UnsupportedOrder, "order " + ord.describe() + " does not map x's to x's and lambdas to lambdas");
  std::vector<ContributionSequence> out;
  ContributionSequence seq;
  auto rec = [&](auto&& self, const MatrixForm& cur) -> void {
    out.push_back(seq);
    if (static_cast<int>(seq.indices.size()) >= max_length || cur.body_rows() == 0) return;
    std::vector<int> order(cur.columns);
    std::sort(order.begin(), order.end());
    for (int col : order) {
      const int p = cur.position_of(col);
      const Rational& a = cur.body(0, p);
      if (a == 0) {
        if (trace)
          trace->notes.push_back("after " + seq.to_string() + ": column " + std::to_string(col + 1) +
                                 " has zero pivot, skipped");
        continue;
      }
      if (!contributes(cur.top[p], a, cur.rows[0], ord, T.space)) continue;
      seq.indices.push_back(col);
      seq.pivots.push_back(a);
      self(self, delete_pivot(col_eliminate(cur, col, 0), col));
      seq.indices.pop_back();
      seq.pivots.pop_back();
    }
  };
  rec(rec, T);
  return out;
}

std::string top_entry_string(const RatVector& exponents) {
  std::string out;
  for (Eigen::Index i = 0; i < exponents.size(); ++i) {
    const Rational& q = exponents(i);
    if (q == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (q != 1) out += is_integer(q) ? "^" + to_string(q) : "^(" + to_string(q) + ")";
  }
  return out.empty() ? "1" : out;
}

std::string render(const MatrixForm& T) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> top;
  for (const RatVector& y : T.top) top.push_back(top_entry_string(y));
  top.push_back(top_entry_string(T.top_numerator));
  cells.push_back(top);
  for (int k = 0; k < T.body_rows(); ++k) {
    std::vector<std::string> row;
    for (int j = 0; j < T.cols(); ++j) row.push_back(to_string(T.body(k, j)));
    row.push_back(to_string(T.rhs(k)));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(T.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    os << "[ ";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j + 1 == row.size()) os << "| ";
      os << row[j] << std::string(width[j] - row[j].size(), ' ') << ' ';
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace recip

#pragma once

#include "recip/elliott.hpp"
#include "recip/ldsystem.hpp"
#include "recip/order.hpp"
#include "recip/rational.hpp"

#include <string>
#include <vector>

namespace recip {

/// Augmented-matrix encoding of
///     scalar * y_{n+1} * L^{-rhs} / prod_i (1 - L^{C_i} y_i)
/// where the y's are x-monomials with rational exponents (the top row) and
/// the C_i are the body columns. Column operations act multiplicatively on
/// the top row.
struct MatrixForm {
  VariableSpace space;              // of the original system
  std::vector<RatVector> top;       // exponents over x_1..x_n, one per current column
  RatVector top_numerator;          // y_{n+1}
  RatMatrix body;                   // rows indexed by the remaining lambdas
  RatVector rhs;
  Rational scalar{1};
  std::vector<int> columns;         // current column -> original column (0-based)
  std::vector<int> rows;            // current row -> original lambda (0-based)

  int position_of(int original_column) const;
  int cols() const { return static_cast<int>(columns.size()); }
  int body_rows() const { return static_cast<int>(body.rows()); }
};

MatrixForm matrix_form(const LDSystem& sys);

/// C<i>: Gaussian column elimination with pivot (row, column i), adding
/// -a_{row,j}/a_{row,i} times column i to every other column (and to the
/// right-hand side); the top row is updated multiplicatively.
MatrixForm col_eliminate(const MatrixForm& T, int original_column, int row = 0);
/// R<i>: row elimination below the pivot (row, column i).
MatrixForm row_eliminate(const MatrixForm& T, int original_column, int row = 0);
/// D<i>: deletes the first body row and column i.
MatrixForm delete_pivot(const MatrixForm& T, int original_column);

enum class SequenceKind { R, RC, CD, RD };

/// Iterated operations over (i_1..i_p), pivoting on successive body rows.
/// Throws ZeroPivot naming the failing step.
MatrixForm sequence_ops(const MatrixForm& T, SequenceKind kind, const std::vector<int>& original_columns);

/// Converts back to a single-term Elliott-rational function; requires
/// integral exponents and entries.
ElliottRational to_elliott(const MatrixForm& T);

/// One body row cleared to integers by a positive multiplier.
struct LinearEquation {
  std::vector<int> columns;  // original columns (0-based)
  std::vector<Integer> coefficients;
  Integer rhs;

  std::string to_string() const;  // "2*a2 - 5*a3 = 3"
};
LinearEquation cleared_row(const MatrixForm& T, int row = 0);

struct ContributionSequence {
  std::vector<int> indices;      // original columns (0-based)
  std::vector<Rational> pivots;  // a'_{s, i_s}

  std::string to_string() const;  // "(1,2)" 1-based
};

struct ContributionTrace {
  std::vector<std::string> notes;
};

/// Enumerates every contribution sequence of length <= max_length (the empty
/// sequence included), depth first, in increasing column order.
std::vector<ContributionSequence> contribution_sequences(const MatrixForm& T, const OrderSpec& ord,
                                                         int max_length, ContributionTrace* trace = nullptr);

/// y^{sign(-pivot)} < l_row under ord; y given by rational x exponents.
bool contributes(const RatVector& y, const Rational& pivot, int lambda_index, const OrderSpec& ord,
                 const VariableSpace& space);

std::string render(const MatrixForm& T);
std::string top_entry_string(const RatVector& exponents);

}  // namespace recip

#pragma once

#include "recip/reciprocity.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recip {

struct GridRow {
  IntVector b;
  bool R = false;
  bool I = false;
  bool monster = false;
  std::optional<std::string> error;
};

struct GridSummary {
  std::size_t points = 0;
  std::size_t r_count = 0;
  std::size_t i_count = 0;
  std::size_t monster_count = 0;
  std::size_t errors = 0;
  bool i_subset_r = true;
  bool monster_subset_r = true;
};

struct GridResult {
  std::vector<GridRow> rows;  // b_1 outermost, b_r innermost, ascending
  GridSummary summary;
};

struct GridOptions {
  OrderSpec order = OrderSpec::case1();
  IMode mode = IMode::SumLevel;
  unsigned jobs = 0;  // 0: hardware concurrency
  EngineOptions engine;
};

/// Evaluates R, I and the monster condition of crude_E(A, b) for every b in
/// the box given by inclusive per-row ranges.
GridResult run_grid(const IntMatrix& A, const std::vector<std::pair<Exponent, Exponent>>& ranges,
                    const GridOptions& opts = {});

GridRow grid_point(const IntMatrix& A, const IntVector& b, const GridOptions& opts = {});

/// Tab-separated table with header "b\tc\tR\tI\tmonster" for two rows.
std::string grid_table(const GridResult& result, int r);

}  // namespace recip

#include "recip/grid.hpp"

#include "recip/errors.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace recip {

GridRow grid_point(const IntMatrix& A, const IntVector& b, const GridOptions& opts) {
  GridRow row;
  row.b = b;
  try {
    LDSystem sys = make_system(A, b);
    ElliottRational crude = crude_E(sys);
    row.R = r_property(crude, opts.order, std::nullopt, opts.engine).holds;
    row.I = i_property(crude, opts.order, opts.mode, opts.engine).holds;
    row.monster = monster_check(matrix_form(sys), opts.order).holds;
  } catch (const Error& e) {
    row.error = std::string(errc_name(e.code())) + ": " + e.what();
  }
  return row;
}

GridResult run_grid(const IntMatrix& A, const std::vector<std::pair<Exponent, Exponent>>& ranges,
                    const GridOptions& opts) {
  if (static_cast<Eigen::Index>(ranges.size()) != A.rows())
    throw Error(Errc::InvalidInput, "need one range per row of A");
  std::vector<IntVector> points;
  bool empty = false;
  for (const auto& [lo, hi] : ranges) empty = empty || lo > hi;
  if (!empty) {
    IntVector cur(A.rows());
    auto rec = [&](auto&& self, int k) -> void {
      if (k == A.rows()) {
        points.push_back(cur);
        return;
      }
      for (Exponent v = ranges[k].first; v <= ranges[k].second; ++v) {
        cur(k) = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
  }

  GridResult out;
  out.rows.resize(points.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, points.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) out.rows[i] = grid_point(A, points[i], opts);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  GridSummary& s = out.summary;
  for (const GridRow& row : out.rows) {
    ++s.points;
    if (row.error) {
      ++s.errors;
      continue;
    }
    s.r_count += row.R;
    s.i_count += row.I;
    s.monster_count += row.monster;
    if (row.I && !row.R) s.i_subset_r = false;
    if (row.monster && !row.R) s.monster_subset_r = false;
  }
  return out;
}

std::string grid_table(const GridResult& result, int r) {
  std::ostringstream os;
  if (r == 2)
    os << "b\tc";
  else if (r == 1)
    os << "b";
  else
    for (int k = 0; k < r; ++k) os << (k ? "\t" : "") << "b" << k + 1;
  os << "\tR\tI\tmonster\n";
  for (const GridRow& row : result.rows) {
    for (int k = 0; k < r; ++k) os << (k ? "\t" : "") << row.b(k);
    if (row.error)
      os << "\terror\terror\terror\n";
    else
      os << '\t' << (row.R ? "true" : "false") << '\t' << (row.I ? "true" : "false") << '\t'
         << (row.monster ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace recip

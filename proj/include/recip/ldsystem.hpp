#pragma once

#include "recip/elliott.hpp"
#include "recip/rational.hpp"

namespace recip {

/// A alpha = b over nonnegative integer alpha.
struct LDSystem {
  IntMatrix A;
  IntVector b;

  int r() const { return static_cast<int>(A.rows()); }
  int n() const { return static_cast<int>(A.cols()); }
  VariableSpace space() const { return {r(), n()}; }
  bool homogeneous() const { return b.isZero(); }
};

/// Validates shapes (r >= 1, n >= 1, |b| = r).
LDSystem make_system(IntMatrix A, IntVector b);
LDSystem homogeneous_system(IntMatrix A);

Eigen::Index rank(const LDSystem& sys);

/// l^{-b} / prod (1 - l^{C_i} x_i): its constant term in the lambdas is E(x; b).
ElliottRational crude_E(const LDSystem& sys);
/// l^{b} prod l^{C_i} x_i / prod (1 - l^{C_i} x_i): its constant term is Ebar(x; b).
ElliottRational crude_Ebar(const LDSystem& sys);

/// Generating functions of the nonnegative solutions of A alpha = b (E) and
/// of the positive solutions of A alpha = -b (Ebar), in x only.
struct SolutionGF {
  ElliottRational E;
  ElliottRational Ebar;
};

}  // namespace recip

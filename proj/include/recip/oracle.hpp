#pragma once

#include "recip/laurent.hpp"
#include "recip/ldsystem.hpp"

#include <optional>
#include <vector>

namespace recip {

enum class Positivity { Nonneg, Strict };

struct SolutionSet {
  std::vector<std::vector<Exponent>> solutions;  // lexicographically sorted
  int bound = 0;
  Positivity positivity = Positivity::Nonneg;
};

/// All alpha with A alpha = b, sum alpha <= bound, alpha >= 0 (or >= 1).
SolutionSet enumerate_solutions(const LDSystem& sys, int bound, Positivity positivity = Positivity::Nonneg);

/// sum of x^alpha over the solutions, as a polynomial in x only.
LaurentPolynomial indicator_series(const SolutionSet& s, int n);

struct Feasibility {
  bool feasible = false;
  std::vector<Integer> witness;  // positive integer solution of A alpha = 0 when feasible
};

/// Exact Fourier-Motzkin decision of A alpha = 0 with every alpha_i >= 1.
Feasibility has_positive_solution(const IntMatrix& A);

}  // namespace recip

#pragma once

#include "recip/elliott.hpp"
#include "recip/ldsystem.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace recip {

enum class FactorClass { PT, NT, LambdaFree };

/// PT when the oriented factor has a positive lambda exponent, NT when
/// negative, LambdaFree when the factor does not involve lambda.
FactorClass classify_factor(const ElliottFactor& f, int lambda, const OrderSpec& ord,
                            const VariableSpace& space);

/// Lexicographic termination measure of a term with respect to one lambda:
/// (largest |lambda exponent|, number of factors attaining it, number of
/// factors whose sign is opposite to the maximal ones). The last entry is
/// zero when the maximal factors have both signs.
struct ReductionMeasure {
  Exponent max_abs = 0;
  int count_at_max = 0;
  int opposite = 0;

  friend auto operator<=>(const ReductionMeasure&, const ReductionMeasure&) = default;
  std::string to_string() const;
};

ReductionMeasure reduction_measure(const ElliottTerm& t, int lambda, const VariableSpace& space);

/// True when the denominator has lambda exponents of both signs.
bool has_mixed_pair(const ElliottTerm& t, int lambda, const VariableSpace& space);

struct TraceRecord {
  int lambda = 0;
  int round = 0;
  std::size_t steps = 0;
  std::size_t live_terms = 0;
  std::size_t finished_terms = 0;
  ReductionMeasure max_measure;
};

struct EngineOptions {
  std::size_t term_budget = 200000;
  std::function<void(const TraceRecord&)> trace;
};

/// One application of 1/((1-A)(1-B)) = 1/(1-AB) (1/(1-A) + 1/(1-B) - 1).
/// A is a factor of largest |lambda exponent|, B the largest factor of the
/// opposite sign. Each output has a strictly smaller ReductionMeasure.
std::vector<ElliottTerm> elliott_step(const ElliottTerm& t, int lambda, const OrderSpec& ord,
                                      const VariableSpace& space);

/// Constant term in lambda under `ord`. The result lives in the same space
/// with lambda's coordinate identically zero.
ElliottRational ct_lambda(const ElliottRational& f, int lambda, const OrderSpec& ord,
                          const EngineOptions& opts = {});

ElliottRational ct_at_zero(const ElliottRational& f, int lambda, const EngineOptions& opts = {});
ElliottRational ct_at_infinity(const ElliottRational& f, int lambda, const EngineOptions& opts = {});
ElliottRational i_operator(const ElliottRational& f, int lambda, const EngineOptions& opts = {});

struct RhoFactorization {
  std::vector<ElliottFactor> pt;
  std::vector<ElliottFactor> nt;
  std::vector<ElliottFactor> lambda_free;
};

RhoFactorization rho_factorization(const std::vector<ElliottFactor>& den, int lambda, const OrderSpec& ord,
                                   const VariableSpace& space);

/// Iterated constant term over every lambda (index order unless given),
/// returned in the x-only space.
ElliottRational ct_all(const ElliottRational& f, const OrderSpec& ord, const EngineOptions& opts = {},
                       const std::optional<std::vector<int>>& lambda_order = std::nullopt);

/// E from the crude E form and Ebar from the crude Ebar form, both under `ord`.
SolutionGF solution_gf(const LDSystem& sys, const OrderSpec& ord = OrderSpec::case1(),
                       const EngineOptions& opts = {});

/// sum f_k g_k x^k for univariate power series f and g (space r=0, n=1).
ElliottRational hadamard_product(const ElliottRational& f, const ElliottRational& g,
                                 const EngineOptions& opts = {});

}  // namespace recip

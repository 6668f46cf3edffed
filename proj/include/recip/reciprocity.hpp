#pragma once

#include "recip/ctengine.hpp"
#include "recip/matrix_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recip {

/// Membership of target in the numerical semigroup generated by positive generators.
bool semigroup_contains(const std::vector<Exponent>& generators, Exponent target);

/// R-property of the single equation a . alpha = b. An all-zero row has the
/// R-property exactly when b != 0; with allow_zero_row=false it raises AllZeroRow.
bool single_equation_r_property(const std::vector<Exponent>& a, Exponent b, bool allow_zero_row = true);

struct RPropertyResult {
  bool holds = false;
  int d = 0;
  ElliottRational ct;           // under the order
  ElliottRational ct_reversed;  // under the reversed order
};

RPropertyResult r_property(const ElliottRational& f, const OrderSpec& ord, std::optional<int> d = std::nullopt,
                           const EngineOptions& opts = {});

enum class IMode { SumLevel, PerTerm };
const char* to_string(IMode m);

struct IPropertyResult {
  bool holds = true;
  IMode mode = IMode::SumLevel;
  int failed_stage = 0;  // 1-based lambda index, 0 when the property holds
  std::optional<ElliottRational> nonzero_value;
  std::vector<std::string> trace;
};

IPropertyResult i_property(const ElliottRational& f, const OrderSpec& ord, IMode mode = IMode::SumLevel,
                           const EngineOptions& opts = {});

struct PropertyReport {
  RPropertyResult r;
  IPropertyResult i;
};

/// Both properties; raises IdentityViolation when I holds but R does not.
PropertyReport property_report(const ElliottRational& f, const OrderSpec& ord, IMode mode = IMode::SumLevel,
                               const EngineOptions& opts = {});

struct MonsterCheck {
  ContributionSequence sequence;
  LinearEquation equation;
  bool r_property = false;
  bool degenerate = false;  // all-zero row
};

struct MonsterVerdict {
  bool holds = true;
  std::vector<MonsterCheck> checked;
  std::optional<std::size_t> failure;  // index into checked
  std::vector<std::string> trace;
};

/// Sufficient condition for the R-property of the crude form of T: every
/// contribution sequence of length < r yields a single equation with the
/// R-property. holds=false is inconclusive.
MonsterVerdict monster_check(const MatrixForm& T, const OrderSpec& ord);

struct ErrorTermDecomposition {
  std::vector<ElliottRational> terms;
  ElliottRational lhs;  // CT under the reversed order
  ElliottRational rhs;  // (-1)^r CT under the order plus the error terms
};

/// E_i = (-1)^i CTbar_{l_{i+2..r}} I_{l_{i+1}} CT_{l_1..i} F. Raises
/// IdentityViolation unless lhs equals rhs.
ErrorTermDecomposition error_terms(const ElliottRational& f, const OrderSpec& ord, const EngineOptions& opts = {});

struct HomogeneousReport {
  bool holds = false;
  ElliottRational E;
  ElliottRational Ebar;  // (-1)^n CT of the crude E form at inverted x
  std::vector<Integer> positive_witness;
};

HomogeneousReport homogeneous_reciprocity(const IntMatrix& A, const EngineOptions& opts = {});

enum class DomainClass { BothZero, BothNonzero, Mixed };
const char* to_string(DomainClass c);

struct DomainReport {
  DomainClass classification = DomainClass::BothZero;
  bool r_property = false;
  ElliottRational ct;
  ElliottRational ct_reversed;
};

/// For a homogeneous matrix form: R-property holds exactly when the two
/// constant terms are not of mixed zero/nonzero type. Raises IdentityViolation otherwise.
DomainReport rec_domain_check(const MatrixForm& T, const OrderSpec& ord, const EngineOptions& opts = {});

}  // namespace recip

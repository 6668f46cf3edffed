#pragma once

#include "recip/grid.hpp"
#include "recip/oracle.hpp"
#include "recip/reciprocity.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace recip {

using Json = nlohmann::ordered_json;

/// {"r", "n", "terms": [{"coef": "p/q", "num": [...], "den": [{"mono": [...], "mult": k}]}]}
Json to_json(const ElliottRational& f);
ElliottRational elliott_from_json(const Json& j);

/// Coefficients sorted by exponent: [{"mono": "x1^2*x3", "exp": [...], "coef": "p/q"}].
Json series_json(const LaurentPolynomial& p, const VariableSpace& space);

struct SystemDocument {
  LDSystem system;
  std::optional<std::vector<std::pair<Exponent, Exponent>>> b_ranges;
};

/// {"A": [[...]], "b": [...], "b_ranges": [[lo, hi], ...]}. "b" defaults to zero.
/// Malformed documents raise InvalidInput naming the offending field.
SystemDocument parse_system_document(std::string_view text);

/// Univariate expressions in x such as "1/(1-x)^2", "(1+x)/(1-x)^3", "x^2/((1-x)*(1-x^2))".
ElliottRational parse_univariate(std::string_view text);

Json to_json(const RPropertyResult& r);
Json to_json(const IPropertyResult& i);
Json to_json(const MonsterVerdict& m);
Json to_json(const ErrorTermDecomposition& e);
Json to_json(const HomogeneousReport& h);
Json to_json(const DomainReport& d);
Json to_json(const SolutionSet& s);
Json to_json(const Feasibility& f);
Json to_json(const GridSummary& s);

}  // namespace recip

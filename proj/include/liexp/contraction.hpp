#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liexp/lie_algebra.hpp"

namespace liexp {

/// Accepts the ASCII names and the Greek aliases (ω -> omega, κ -> kappa).
std::string canonical_parameter(std::string_view name);

struct ContractionOutcome {
  std::string kind;  // "parameter" or "iw"
  std::string description;
  LieAlgebra result;
  std::string compared_with;
  std::optional<std::string> difference;  // nullopt when equal

  bool equal() const { return !difference.has_value(); }
};

/// parameter_contract(alg, param), compared with the catalog Galilei algebra.
ContractionOutcome contract_parameter(const LieAlgebra& alg, std::string_view param);

/// iw_contract at a fixed curvature value, compared with catalog Galilei.
ContractionOutcome contract_iw(const LieAlgebra& alg, std::string_view param,
                               const Rational& value, const Decomposition& split);

/// Both round trips for a curved catalog algebra: poincare and euclid4 use the
/// worldline split at omega = -1 and +1, newton_hooke the spacetime split at
/// kappa = -1. `param` overrides the contracted parameter.
std::vector<ContractionOutcome> contraction_roundtrips(const LieAlgebra& alg,
                                                       std::optional<std::string> param = {});

}  // namespace liexp

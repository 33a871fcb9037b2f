#include "liexp/contraction.hpp"

#include <fmt/format.h>

#include "liexp/catalog.hpp"

namespace liexp {

std::string canonical_parameter(std::string_view name) {
  if (name == "ω") return "omega";
  if (name == "κ") return "kappa";
  if (name == "ξ") return "xi";
  if (name == "ε") return "eps";
  if (name == "α1" || name == "α₁") return "a1";
  if (name == "α2" || name == "α₂") return "a2";
  return std::string(name);
}

namespace {

ContractionOutcome compare(std::string kind, std::string description, LieAlgebra result) {
  const AlgebraPtr galilei = catalog("galilei");
  auto diff = structure_difference(result, *galilei);
  return {std::move(kind), std::move(description), std::move(result), "galilei", std::move(diff)};
}

}  // namespace

ContractionOutcome contract_parameter(const LieAlgebra& alg, std::string_view param) {
  const std::string p = canonical_parameter(param);
  if (!alg.context() || !alg.context()->index_of(p))
    throw Error(fmt::format("{} has no parameter '{}'", alg.name(), p));
  return compare("parameter", fmt::format("{} with {} -> 0", alg.name(), p),
                 parameter_contract(alg, p));
}

ContractionOutcome contract_iw(const LieAlgebra& alg, std::string_view param,
                               const Rational& value, const Decomposition& split) {
  const std::string p = canonical_parameter(param);
  if (!alg.context() || !alg.context()->index_of(p))
    throw Error(fmt::format("{} has no parameter '{}'", alg.name(), p));
  Assignment at;
  at.emplace(p, Poly(value));
  const LieAlgebra fixed = specialize(alg, at);
  std::string gens;
  for (auto i : split.p) gens += (gens.empty() ? "" : ",") + alg.generators()[i];
  return compare("iw",
                 fmt::format("{} at {}={}, rescale p=({}) by eps, eps -> 0", alg.name(), p,
                             value.get_str(), gens),
                 iw_contract(fixed, split));
}

std::vector<ContractionOutcome> contraction_roundtrips(const LieAlgebra& alg,
                                                       std::optional<std::string> param) {
  std::string p;
  if (param) {
    p = canonical_parameter(*param);
  } else if (alg.context() && alg.context()->size() == 1) {
    p = alg.context()->names().front();
  } else {
    throw Error(fmt::format("{} has no single curvature parameter; pass one explicitly",
                            alg.name()));
  }
  std::vector<ContractionOutcome> out{contract_parameter(alg, p)};
  if (alg.name() == "poincare" && p == "omega")
    out.push_back(contract_iw(alg, p, -1, worldline_split(alg)));
  else if (alg.name() == "euclid4" && p == "omega")
    out.push_back(contract_iw(alg, p, 1, worldline_split(alg)));
  else if (alg.name() == "newton_hooke" && p == "kappa")
    out.push_back(contract_iw(alg, p, -1, spacetime_split(alg)));
  return out;
}

}  // namespace liexp

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liexp/lie_algebra.hpp"

namespace liexp {

/// Names accepted by catalog(): galilei, galilei_ext, poincare, newton_hooke,
/// euclid4.
const std::vector<std::string>& catalog_names();

/// Kinematical algebra in the basis order Xi < H < P1..P3 < K1..K3 < J1..J3.
/// The Jacobi identity is verified before returning.
AlgebraPtr catalog(std::string_view name);

/// Parity: (H, P, K, J) -> (H, -P, -K, J); Xi is fixed.
LinearMap parity(const LieAlgebra& alg);
/// Parity times time reversal: (H, P, K, J) -> (-H, -P, K, J); Xi -> -Xi.
LinearMap parity_time_reversal(const LieAlgebra& alg);

/// Cartan split induced by parity_time_reversal: p = (H, P), h = (K, J).
Decomposition spacetime_split(const LieAlgebra& alg);
/// Cartan split induced by parity: p = (P, K), h = (H, J).
Decomposition worldline_split(const LieAlgebra& alg);

}  // namespace liexp

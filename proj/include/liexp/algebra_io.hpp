#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "liexp/lie_algebra.hpp"

namespace liexp {

/// Loaded structure constants violate the Jacobi identity.
class JacobiError : public Error {
 public:
  JacobiError(std::string what, std::vector<JacobiViolation> violations)
      : Error(std::move(what)), violations_(std::move(violations)) {}

  const std::vector<JacobiViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<JacobiViolation> violations_;
};

struct LoadOptions {
  bool allow_non_lie = false;
};

/// Read an algebra definition (JSON):
///
///   {
///     "name": "galilei",
///     "parameters": ["omega"],
///     "generators": ["H", "P1", ...],
///     "brackets": [{"left": "H", "right": "K1", "terms": [{"gen": "P1", "coeff": "-1"}]}],
///     "metadata": {"isomorphism": "..."}
///   }
///
/// Only "name" and "generators" are required. Coefficients use the polynomial
/// grammar over "parameters". The Jacobi identity is checked unless
/// `allow_non_lie` is set.
LieAlgebra parse_algebra(std::string_view text, const LoadOptions& options = {});
LieAlgebra parse_algebra_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Canonical text: brackets in basis order (i < j), terms by generator index,
/// two-space indentation, trailing newline.
std::string emit_algebra(const LieAlgebra& alg);

/// One line per violated triple, e.g. `[H,P1,K1]: 2*P1`.
std::vector<std::string> describe(const LieAlgebra& alg, const std::vector<JacobiViolation>& v);

}  // namespace liexp

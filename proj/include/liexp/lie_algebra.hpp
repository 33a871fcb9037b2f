#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liexp/poly.hpp"

namespace liexp {

struct BracketTerm {
  std::size_t gen;
  Poly coeff;

  bool operator==(const BracketTerm& o) const { return gen == o.gen && coeff == o.coeff; }
};

using BracketTerms = std::vector<BracketTerm>;

/// Coordinates over an algebra's ordered basis.
using Vector = std::vector<Poly>;

/// Finite-dimensional Lie algebra given by structure constants on a named,
/// ordered basis. Only pairs i < j are stored; [x_j, x_i] is read as the
/// negation and [x_i, x_i] is zero.
class LieAlgebra {
 public:
  class Builder;

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::size_t dim() const noexcept { return generators_.size(); }
  const ContextPtr& context() const noexcept { return ctx_; }
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  std::optional<std::size_t> index_of(std::string_view gen) const;
  /// Like index_of but throws on unknown names.
  std::size_t require(std::string_view gen) const;

  /// Stored entries, keyed by (i, j) with i < j.
  const std::map<std::pair<std::size_t, std::size_t>, BracketTerms>& brackets() const noexcept {
    return brackets_;
  }
  /// [x_i, x_j] for any i, j, with the antisymmetry sign applied.
  const BracketTerms& structure(std::size_t i, std::size_t j) const {
    return table_[i * generators_.size() + j];
  }

  Vector zero_vector() const;
  Vector basis_vector(std::size_t i) const;

  /// Same algebra over a context that contains every parameter in use.
  LieAlgebra with_context(ContextPtr ctx) const;
  LieAlgebra with_name(std::string name) const;
  LieAlgebra with_metadata(std::string key, std::string value) const;

 private:
  void build_table();

  std::string name_;
  std::vector<std::string> generators_;
  ContextPtr ctx_;
  std::map<std::pair<std::size_t, std::size_t>, BracketTerms> brackets_;
  std::map<std::string, std::string> metadata_;
  std::vector<BracketTerms> table_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

class LieAlgebra::Builder {
 public:
  Builder(std::string name, std::vector<std::string> generators, ContextPtr ctx);

  /// Add `terms` to [left, right]. Adding to [x, x] is an error unless the
  /// terms cancel.
  Builder& add(std::size_t left, std::size_t right, const BracketTerms& terms);
  Builder& add(std::string_view left, std::string_view right,
               const std::vector<std::pair<std::string, Poly>>& terms);
  Builder& metadata(std::string key, std::string value);

  LieAlgebra build() const;
  AlgebraPtr build_shared() const { return std::make_shared<const LieAlgebra>(build()); }

 private:
  LieAlgebra alg_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y);

bool is_zero(const Vector& v);
std::string format_vector(const LieAlgebra& alg, const Vector& v);

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;
};

/// Cyclic sum [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] for every
/// i < j < k; only the nonzero ones are returned.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg);

/// Square matrix over the basis; column j is the image of generator j.
struct LinearMap {
  std::vector<Vector> columns;

  static LinearMap identity(const LieAlgebra& alg);
  static LinearMap diagonal(const LieAlgebra& alg, const std::vector<int>& signs);
  Vector apply(const Vector& v) const;
};

struct CheckResult {
  bool ok = true;
  std::string violation;
};

/// Homomorphism on all basis pairs and involutivity.
CheckResult automorphism_check(const LieAlgebra& alg, const LinearMap& f);

struct Decomposition {
  std::vector<std::size_t> h;
  std::vector<std::size_t> p;
  std::string label;
};

enum class Containment { Zero, InH, Other };

struct DecompositionReport {
  bool hh_in_h = false;
  bool hp_in_p = false;
  Containment pp = Containment::Other;
};

DecompositionReport decomposition_check(const LieAlgebra& alg, const Decomposition& d);

/// Decomposition with `p` given by generator names and `h` the complement.
Decomposition make_decomposition(const LieAlgebra& alg, const std::vector<std::string>& p,
                                 std::string label = {});

/// Rescale the p generators by eps and take eps -> 0. Throws DivergenceError
/// when a structure constant would blow up.
LieAlgebra iw_contract(const LieAlgebra& alg, const Decomposition& d);

/// Set a curvature parameter to zero in every structure constant.
LieAlgebra parameter_contract(const LieAlgebra& alg, std::string_view param);

/// Substitute parameter values in every structure constant. The assignment is
/// recorded in the metadata under `fixed.<name>`.
LieAlgebra specialize(const LieAlgebra& alg, const Assignment& values);

/// nullopt when both algebras have the same ordered generator names and
/// identical structure constants; otherwise a description of the first
/// difference.
std::optional<std::string> structure_difference(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liexp

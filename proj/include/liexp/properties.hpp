#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liexp/uea.hpp"

namespace liexp {

/// Seeded generators of random test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  Rational rational();
  /// Up to `max_terms` terms of total degree <= `max_degree` over ctx.
  Poly poly(const ContextPtr& ctx, int max_terms = 3, int max_degree = 2);
  /// Word of length min_len..max_len over the algebra's generators.
  Letters word(const LieAlgebra& alg, int max_len, int min_len = 0);
  /// Sum of up to `max_terms` PBW monomials of degree <= `max_degree`,
  /// coefficients small integers times at most one parameter.
  UEAElement element(const AlgebraPtr& alg, int max_degree = 3, int max_terms = 2);

 private:
  std::mt19937_64 rng_;
};

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct PropertyOptions {
  std::size_t ring_samples = 200;
  std::size_t pbw_samples = 100;
  std::size_t assoc_samples = 100;   // per algebra
  std::size_t jacobi_samples = 100;  // per algebra
};

/// Ring axioms and substitution homomorphism for Poly.
std::vector<PropertyResult> ring_properties(std::uint64_t seed, std::size_t samples);
/// Idempotence and transposition invariance of normal ordering.
std::vector<PropertyResult> pbw_properties(const AlgebraPtr& alg, std::uint64_t seed,
                                           std::size_t samples);
PropertyResult associativity_property(const AlgebraPtr& alg, std::uint64_t seed,
                                      std::size_t samples);
PropertyResult uea_jacobi_property(const AlgebraPtr& alg, std::uint64_t seed,
                                   std::size_t samples);

/// Everything above, over every catalog algebra.
std::vector<PropertyResult> run_properties(std::uint64_t seed, const PropertyOptions& options = {});

}  // namespace liexp

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liexp/lie_algebra.hpp"

namespace liexp {

/// Sequence of generator indices, in any order.
using Letters = std::vector<std::uint16_t>;

/// A word with its coefficient; input to normal ordering.
struct Word {
  Letters letters;
  Poly coeff;
};

/// PBW exponent vector over the algebra's ordered basis. The empty vector and
/// the all-zero vector both denote the unit.
using Monomial = std::vector<std::uint16_t>;

/// Graded lexicographic order on exponent vectors.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of the universal enveloping algebra in PBW normal form. Equality is
/// structural equality of the normalized term maps.
class UEAElement {
 public:
  using Terms = std::map<Monomial, Poly, MonomialOrder>;

  explicit UEAElement(AlgebraPtr alg);

  static UEAElement scalar(AlgebraPtr alg, const Poly& c);
  static UEAElement unit(AlgebraPtr alg) { return scalar(std::move(alg), 1); }
  static UEAElement generator(AlgebraPtr alg, std::size_t index);
  static UEAElement generator(const AlgebraPtr& alg, std::string_view name);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest PBW degree; -1 for zero.
  int degree() const;

  /// Add c * (PBW monomial). The monomial must be an exponent vector.
  void add_term(const Monomial& m, const Poly& c);

  UEAElement operator-() const;
  UEAElement& operator+=(const UEAElement& rhs);
  UEAElement& operator-=(const UEAElement& rhs);
  UEAElement scaled(const Poly& c) const;

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
  friend UEAElement operator*(const Poly& c, const UEAElement& a) { return a.scaled(c); }

  bool operator==(const UEAElement& rhs) const;
  bool operator!=(const UEAElement& rhs) const { return !(*this == rhs); }

  /// Canonical text, terms in descending graded-lex order, e.g.
  /// `-2*a1*H*P1 + 3*a2*P2*P3*K1`.
  std::string str() const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

/// Rewrite words into PBW form. An adjacent out-of-order pair x_b x_a is
/// replaced by x_a x_b + [x_b, x_a]; words are processed longest and most
/// inverted first so equal words merge before being rewritten.
UEAElement normal_form(const AlgebraPtr& alg, const std::vector<Word>& words);

UEAElement product(const UEAElement& a, const UEAElement& b);
UEAElement commutator(const UEAElement& a, const UEAElement& b);
UEAElement power(const UEAElement& a, unsigned n);

struct Centrality {
  bool central = true;
  std::optional<std::size_t> witness;  // first generator that fails to commute
  std::optional<UEAElement> residual;  // [x, witness]
};

Centrality is_central(const UEAElement& x);

/// Substitute parameters in every coefficient.
UEAElement substitute(const UEAElement& x, const Assignment& values);
UEAElement reduce(const UEAElement& x, std::span<const PowerRule> rules);

/// Coordinates when x is a linear combination of generators (no constant term).
std::optional<Vector> as_linear(const UEAElement& x);
UEAElement from_linear(const AlgebraPtr& alg, const Vector& v);

/// Re-read x in another algebra sharing the generator names, normal ordering
/// with that algebra's brackets.
UEAElement transport(const UEAElement& x, const AlgebraPtr& target);

/// Noncommutative polynomial kept as words without normal ordering. Used where
/// an expression must be split by coefficient before any reordering happens.
class FormalSum {
 public:
  explicit FormalSum(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const std::map<Letters, Poly>& terms() const noexcept { return terms_; }

  void add(const Letters& w, const Poly& c);
  FormalSum& operator+=(const FormalSum& rhs);
  FormalSum scaled(const Poly& c) const;
  FormalSum operator-() const { return scaled(-1); }
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

  std::vector<Word> words() const;
  UEAElement normal_form() const;
  /// Same words over another algebra with the same generator names.
  FormalSum transported(const AlgebraPtr& target) const;

 private:
  AlgebraPtr alg_;
  std::map<Letters, Poly> terms_;
};

}  // namespace liexp

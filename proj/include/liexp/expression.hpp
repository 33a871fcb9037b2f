#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "liexp/uea.hpp"

namespace liexp {

/// Parsed UEA expression. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | factor
///   factor  := atom ('^' INT)?
///   atom    := NUMBER | IDENT | '<' KEY '>' | '[' expr ',' expr ']' | '(' expr ')'
///
/// IDENT is a generator of the algebra or one of its parameters; `<KEY>` is a
/// named element of the algebra; division is by nonzero rational constants.
class Expr {
 public:
  enum class Kind { Scalar, Generator, Named, Sum, Neg, Product, Commutator, Power };

  static Expr scalar(Poly c);
  static Expr generator(std::size_t index);
  static Expr named(std::string key);
  static Expr sum(std::vector<Expr> terms);
  static Expr neg(Expr e);
  static Expr product(std::vector<Expr> factors);
  static Expr commutator(Expr a, Expr b);
  static Expr power(Expr base, unsigned n);

  Kind kind() const;

  /// Normal-ordered value in `alg`.
  UEAElement evaluate(const AlgebraPtr& alg) const;
  /// Literal left-to-right expansion into words, without reordering.
  FormalSum expand(const AlgebraPtr& alg) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Expr parse_expression(std::string_view text, const LieAlgebra& alg);

/// parse_expression followed by evaluate.
UEAElement parse_element(std::string_view text, const AlgebraPtr& alg);

/// Keys accepted by named_element for this algebra (W1..W3, JP, JW, KP, PP,
/// KK, JJ, PW, KW and, where defined, the Casimirs C1, C2).
std::vector<std::string> named_keys(const LieAlgebra& alg);

/// Defining expression of a named element, in the expression grammar.
std::string named_definition(const LieAlgebra& alg, std::string_view key);

UEAElement named_element(const AlgebraPtr& alg, std::string_view key);
FormalSum formal_named_element(const AlgebraPtr& alg, std::string_view key);

struct IdentityResult {
  bool ok = false;
  UEAElement residual;  // normal form of lhs - rhs
};

IdentityResult verify_identity(const AlgebraPtr& alg, const Expr& lhs, const Expr& rhs);
IdentityResult verify_identity(const AlgebraPtr& alg, std::string_view lhs, std::string_view rhs);

}  // namespace liexp

#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liexp/error.hpp"

namespace liexp {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);

/// Ordered set of commuting parameter names. At most one slot may be marked as
/// the contraction parameter; only that slot admits negative exponents.
class ParamContext {
 public:
  static std::shared_ptr<const ParamContext> make(std::vector<std::string> names,
                                                  std::optional<std::string> contraction = {});

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> contraction_slot() const noexcept { return contraction_; }

  /// A new context holding these names followed by the missing `extra` ones.
  std::shared_ptr<const ParamContext> with(const std::vector<std::string>& extra,
                                           std::optional<std::string> contraction = {}) const;

  bool operator==(const ParamContext& other) const {
    return names_ == other.names_ && contraction_ == other.contraction_;
  }

 private:
  ParamContext() = default;
  std::vector<std::string> names_;
  std::optional<std::size_t> contraction_;
};

using ContextPtr = std::shared_ptr<const ParamContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Sparse multivariate polynomial with rational coefficients over a parameter
/// context. A context-free polynomial is always a constant and combines with
/// any context.
class Poly {
 public:
  using Exponents = std::vector<int>;

  /// Graded lexicographic: total degree first, then the earlier slot decides.
  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GradedLex>;

  Poly() = default;
  Poly(int value) : Poly(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& value);               // NOLINT(google-explicit-constructor)

  static Poly constant(ContextPtr ctx, const Rational& value);
  static Poly variable(ContextPtr ctx, std::string_view name, int power = 1);
  static Poly monomial(ContextPtr ctx, Exponents exponents, const Rational& coeff);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the polynomial is constant.
  std::optional<Rational> constant_value() const;

  /// Exponent range of one parameter over all terms; {0,0} for zero.
  int max_degree_in(std::string_view name) const;
  int min_degree_in(std::string_view name) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly scaled(const Rational& factor) const;
  Poly pow(unsigned exponent) const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  /// Equality of the represented polynomials. Contexts may differ as long as
  /// the used parameter names agree.
  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  /// Canonical text, terms in descending graded-lex order, e.g. `-4*a2^2*c1*c2`.
  std::string str() const;
  /// Like str() but parenthesized when there is more than one term.
  std::string str_factor() const;

 private:
  friend Poly embed(const Poly& p, ContextPtr ctx);
  friend Poly substitute(const Poly& p, const std::map<std::string, Poly, std::less<>>& assignment);

  void add_term(const Exponents& e, const Rational& c);
  Poly lifted(const ContextPtr& ctx) const;
  static ContextPtr resolve(const ContextPtr& a, const ContextPtr& b);

  ContextPtr ctx_;
  Terms terms_;
};

using Assignment = std::map<std::string, Poly, std::less<>>;

/// Replace assigned parameters and renormalize. Negative powers may only be
/// assigned nonzero constants.
Poly substitute(const Poly& p, const Assignment& assignment);

/// Set the contraction parameter to zero. Throws DivergenceError carrying the
/// most negative exponent if any term has a negative power.
Poly limit_eps_zero(const Poly& p);

/// Re-express `p` over another context by parameter name.
Poly embed(const Poly& p, ContextPtr ctx);

/// Terms whose exponent of `name` equals `power`, with that factor removed.
Poly coefficient_of_power(const Poly& p, std::string_view name, int power);

/// Rewrite rule `param^power -> replacement`, applied until no exponent of
/// `param` reaches `power`. Models arithmetic modulo a univariate relation.
struct PowerRule {
  std::string param;
  int power = 2;
  Poly replacement;
};

Poly reduce(const Poly& p, std::span<const PowerRule> rules);

/// Parse the polynomial grammar: integers, `/`, identifiers, `+ - * ^` and
/// parentheses. Identifiers must name parameters of `ctx`.
Poly parse_poly(std::string_view text, const ContextPtr& ctx);

}  // namespace liexp

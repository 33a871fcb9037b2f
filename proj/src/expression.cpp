#include "liexp/expression.hpp"

#include <map>
#include <utility>

#include "lexer.hpp"

namespace liexp {

struct Expr::Node {
  explicit Node(Kind k) : kind(k) {}

  Kind kind;
  Poly scalar;
  std::size_t gen = 0;
  std::string key;
  unsigned exponent = 0;
  std::vector<Expr> children;
};

Expr Expr::scalar(Poly c) {
  Node n{Kind::Scalar};
  n.scalar = std::move(c);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::generator(std::size_t index) {
  Node n{Kind::Generator};
  n.gen = index;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::named(std::string key) {
  Node n{Kind::Named};
  n.key = std::move(key);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.size() == 1) return terms.front();
  Node n{Kind::Sum};
  n.children = std::move(terms);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::neg(Expr e) {
  Node n{Kind::Neg};
  n.children.push_back(std::move(e));
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.size() == 1) return factors.front();
  Node n{Kind::Product};
  n.children = std::move(factors);
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::commutator(Expr a, Expr b) {
  Node n{Kind::Commutator};
  n.children = {std::move(a), std::move(b)};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::power(Expr base, unsigned exponent) {
  Node n{Kind::Power};
  n.exponent = exponent;
  n.children.push_back(std::move(base));
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }

namespace {

// Specializations recorded by liexp::specialize() apply to named elements too.
Assignment fixed_parameters(const LieAlgebra& alg) {
  Assignment out;
  for (const auto& [key, value] : alg.metadata()) {
    if (key.rfind("fixed.", 0) != 0) continue;
    out.emplace(key.substr(6), parse_poly(value, alg.context()));
  }
  return out;
}

}  // namespace

UEAElement Expr::evaluate(const AlgebraPtr& alg) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Scalar:
      return UEAElement::scalar(alg, n.scalar);
    case Kind::Generator:
      return UEAElement::generator(alg, n.gen);
    case Kind::Named:
      return named_element(alg, n.key);
    case Kind::Sum: {
      UEAElement acc(alg);
      for (const auto& c : n.children) acc += c.evaluate(alg);
      return acc;
    }
    case Kind::Neg:
      return -n.children[0].evaluate(alg);
    case Kind::Product: {
      UEAElement acc = n.children[0].evaluate(alg);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = liexp::product(acc, n.children[i].evaluate(alg));
      return acc;
    }
    case Kind::Commutator:
      return liexp::commutator(n.children[0].evaluate(alg), n.children[1].evaluate(alg));
    case Kind::Power:
      return liexp::power(n.children[0].evaluate(alg), n.exponent);
  }
  throw Error("bad expression node");
}

FormalSum Expr::expand(const AlgebraPtr& alg) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Scalar: {
      FormalSum s(alg);
      s.add({}, n.scalar);
      return s;
    }
    case Kind::Generator: {
      FormalSum s(alg);
      s.add({static_cast<std::uint16_t>(n.gen)}, 1);
      return s;
    }
    case Kind::Named:
      return formal_named_element(alg, n.key);
    case Kind::Sum: {
      FormalSum acc(alg);
      for (const auto& c : n.children) acc += c.expand(alg);
      return acc;
    }
    case Kind::Neg:
      return -n.children[0].expand(alg);
    case Kind::Product: {
      FormalSum acc = n.children[0].expand(alg);
      for (std::size_t i = 1; i < n.children.size(); ++i) acc = acc * n.children[i].expand(alg);
      return acc;
    }
    case Kind::Commutator: {
      const FormalSum a = n.children[0].expand(alg);
      const FormalSum b = n.children[1].expand(alg);
      FormalSum acc = a * b;
      acc += -(b * a);
      return acc;
    }
    case Kind::Power: {
      FormalSum acc(alg);
      acc.add({}, 1);
      const FormalSum base = n.children[0].expand(alg);
      for (unsigned i = 0; i < n.exponent; ++i) acc = acc * base;
      return acc;
    }
  }
  throw Error("bad expression node");
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const LieAlgebra& alg)
      : lex_(text), alg_(alg), keys_(named_keys(alg)) {}

  Expr parse() {
    Expr e = expr();
    if (lex_.peek().kind != detail::Tok::End) lex_.fail_here("unexpected token");
    return e;
  }

 private:
  Expr expr() {
    std::vector<Expr> terms{term()};
    while (true) {
      if (lex_.accept('+')) {
        terms.push_back(term());
      } else if (lex_.accept('-')) {
        terms.push_back(Expr::neg(term()));
      } else {
        return Expr::sum(std::move(terms));
      }
    }
  }

  Expr term() {
    std::vector<Expr> factors{unary()};
    while (true) {
      if (lex_.accept('*')) {
        factors.push_back(unary());
      } else if (lex_.at_symbol('/')) {
        const auto at = lex_.take().offset;
        if (lex_.peek().kind != detail::Tok::Number) lex_.fail_here("expected integer divisor");
        Rational d(mpz_class(lex_.take().text));
        if (d == 0) lex_.fail("division by zero", at);
        factors.push_back(Expr::scalar(Poly(Rational(1) / d)));
      } else {
        return Expr::product(std::move(factors));
      }
    }
  }

  Expr unary() {
    if (lex_.accept('-')) return Expr::neg(unary());
    if (lex_.accept('+')) return unary();
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    if (!lex_.accept('^')) return base;
    if (lex_.peek().kind != detail::Tok::Number) lex_.fail_here("expected non-negative exponent");
    return Expr::power(std::move(base), static_cast<unsigned>(std::stoul(lex_.take().text)));
  }

  Expr atom() {
    const auto t = lex_.peek();
    if (t.kind == detail::Tok::Number) {
      lex_.take();
      return Expr::scalar(Poly(Rational(mpz_class(t.text))));
    }
    if (t.kind == detail::Tok::Ident) {
      lex_.take();
      if (auto g = alg_.index_of(t.text)) return Expr::generator(*g);
      if (alg_.context() && alg_.context()->index_of(t.text))
        return Expr::scalar(Poly::variable(alg_.context(), t.text));
      lex_.fail("unknown symbol '" + t.text + "'", t.offset);
    }
    if (lex_.accept('<')) {
      const auto k = lex_.peek();
      if (k.kind != detail::Tok::Ident) lex_.fail_here("expected named element key");
      lex_.take();
      if (std::find(keys_.begin(), keys_.end(), k.text) == keys_.end())
        lex_.fail("unknown named element '<" + k.text + ">' for " + alg_.name(), k.offset);
      lex_.expect('>');
      return Expr::named(k.text);
    }
    if (lex_.accept('[')) {
      Expr a = expr();
      lex_.expect(',');
      Expr b = expr();
      lex_.expect(']');
      return Expr::commutator(std::move(a), std::move(b));
    }
    if (lex_.accept('(')) {
      Expr e = expr();
      lex_.expect(')');
      return e;
    }
    lex_.fail_here("expected generator, number, '<', '[' or '('");
  }

  detail::Lexer lex_;
  const LieAlgebra& alg_;
  std::vector<std::string> keys_;
};

using Definitions = std::vector<std::pair<std::string, std::string>>;

Definitions vector_products(bool relativistic) {
  Definitions d;
  if (relativistic) {
    d.emplace_back("W1", "omega*H*J1 + P3*K2 - P2*K3");
    d.emplace_back("W2", "omega*H*J2 + P1*K3 - P3*K1");
    d.emplace_back("W3", "omega*H*J3 + P2*K1 - P1*K2");
  } else {
    d.emplace_back("W1", "P3*K2 - P2*K3");
    d.emplace_back("W2", "P1*K3 - P3*K1");
    d.emplace_back("W3", "P2*K1 - P1*K2");
  }
  d.emplace_back("PP", "P1^2 + P2^2 + P3^2");
  d.emplace_back("KK", "K1^2 + K2^2 + K3^2");
  d.emplace_back("JJ", "J1^2 + J2^2 + J3^2");
  d.emplace_back("JP", "J1*P1 + J2*P2 + J3*P3");
  d.emplace_back("KP", "K1*P1 + K2*P2 + K3*P3");
  d.emplace_back("JW", "J1*<W1> + J2*<W2> + J3*<W3>");
  d.emplace_back("PW", "P1*<W1> + P2*<W2> + P3*<W3>");
  d.emplace_back("KW", "K1*<W1> + K2*<W2> + K3*<W3>");
  return d;
}

const Definitions& definitions_for(const std::string& name) {
  static const Definitions none;
  static const std::map<std::string, Definitions> table = [] {
    std::map<std::string, Definitions> t;
    Definitions g = vector_products(false);
    g.emplace_back("C1", "<PP>");
    g.emplace_back("C2", "<W1>^2 + <W2>^2 + <W3>^2");
    t["galilei"] = g;

    t["galilei_ext"] = vector_products(false);

    Definitions nh = vector_products(false);
    nh.emplace_back("C1", "<PP> + kappa*<KK>");
    nh.emplace_back("C2", "<W1>^2 + <W2>^2 + <W3>^2");
    t["newton_hooke"] = nh;

    Definitions p = vector_products(true);
    p.emplace_back("C1", "<PP> + omega*H^2");
    p.emplace_back("C2", "<W1>^2 + <W2>^2 + <W3>^2 + omega*<JP>^2");
    t["poincare"] = p;
    t["euclid4"] = p;
    return t;
  }();
  auto it = table.find(name);
  return it == table.end() ? none : it->second;
}

}  // namespace

Expr parse_expression(std::string_view text, const LieAlgebra& alg) {
  return ExprParser(text, alg).parse();
}

UEAElement parse_element(std::string_view text, const AlgebraPtr& alg) {
  return parse_expression(text, *alg).evaluate(alg);
}

std::vector<std::string> named_keys(const LieAlgebra& alg) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : definitions_for(alg.name())) keys.push_back(k);
  return keys;
}

std::string named_definition(const LieAlgebra& alg, std::string_view key) {
  for (const auto& [k, v] : definitions_for(alg.name()))
    if (k == key) return v;
  throw Error("unknown named element '" + std::string(key) + "' for " + alg.name());
}

UEAElement named_element(const AlgebraPtr& alg, std::string_view key) {
  UEAElement x = parse_element(named_definition(*alg, key), alg);
  const Assignment fixed = fixed_parameters(*alg);
  return fixed.empty() ? x : substitute(x, fixed);
}

FormalSum formal_named_element(const AlgebraPtr& alg, std::string_view key) {
  FormalSum s = parse_expression(named_definition(*alg, key), *alg).expand(alg);
  const Assignment fixed = fixed_parameters(*alg);
  if (fixed.empty()) return s;
  FormalSum out(alg);
  for (const auto& [w, c] : s.terms()) out.add(w, substitute(c, fixed));
  return out;
}

IdentityResult verify_identity(const AlgebraPtr& alg, const Expr& lhs, const Expr& rhs) {
  UEAElement residual = lhs.evaluate(alg) - rhs.evaluate(alg);
  const bool ok = residual.is_zero();
  return {ok, std::move(residual)};
}

IdentityResult verify_identity(const AlgebraPtr& alg, std::string_view lhs, std::string_view rhs) {
  return verify_identity(alg, parse_expression(lhs, *alg), parse_expression(rhs, *alg));
}

}  // namespace liexp

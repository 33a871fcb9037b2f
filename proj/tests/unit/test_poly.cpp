#include <catch2/catch.hpp>

#include <array>

#include "liexp/poly.hpp"

using namespace liexp;

namespace {

ContextPtr ctx() {
  static const ContextPtr c = ParamContext::make({"a1", "a2", "c1", "c2", "omega", "kappa"});
  return c;
}

Poly P(const char* text) { return parse_poly(text, ctx()); }
Poly var(const char* name) { return Poly::variable(ctx(), name); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms", "[poly]") {
  const Rational r = parse_rational("6/-4");
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("-0/7") == 0);
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("addition", "[poly]") {
  CHECK((var("a1") + 2) + (-var("a1")) == Poly(2));
  CHECK((Poly(0) + var("omega")) == var("omega"));
  const Poly half_omega = var("omega").scaled(Rational(1, 2));
  CHECK(half_omega + half_omega == var("omega"));
  CHECK((var("a1") - var("a1")).is_zero());
}

TEST_CASE("multiplication", "[poly]") {
  CHECK((var("a2") * var("a2")).str() == "a2^2");
  CHECK((P("a1*c1 + a2*c2") * Poly(0)).is_zero());
  CHECK(P("(a1 + 1)^2") == P("a1^2 + 2*a1 + 1"));
  CHECK(P("a1 + a2").pow(0) == Poly(1));
}

TEST_CASE("Laurent terms in the contraction parameter", "[poly]") {
  const ContextPtr c = ParamContext::make({"a1", "omega", "kappa", "eps"}, "eps");
  const Poly eps = Poly::variable(c, "eps");
  const Poly inv = Poly::variable(c, "eps", -1);
  CHECK((Poly(1) + inv) * eps == eps + 1);
  CHECK(inv.min_degree_in("eps") == -1);
  CHECK_THROWS_AS(Poly::variable(c, "a1", -1), Error);
}

TEST_CASE("mixing contexts", "[poly]") {
  const ContextPtr other = ParamContext::make({"x", "y"});
  CHECK_THROWS_AS(var("a1") + Poly::variable(other, "x"), ContextMismatch);
  CHECK_THROWS_AS(var("a1") * Poly::variable(other, "x"), ContextMismatch);
  // Constants without a context combine with anything.
  CHECK((Poly(3) + Poly::variable(other, "x")).str() == "x + 3");
  CHECK_THROWS_AS(ParamContext::make({"a", "a"}), Error);
}

TEST_CASE("canonical text is graded lexicographic", "[poly]") {
  CHECK(P("c2*c1*a2^2*(-4)").str() == "-4*a2^2*c1*c2");
  CHECK(P("1 + omega + a1^2 + a1*a2").str() == "a1^2 + a1*a2 + omega + 1");
  CHECK(P("-1/4*a1").str() == "-1/4*a1");
  CHECK(Poly(0).str() == "0");
  CHECK(P("a1 + 1").str_factor() == "(a1 + 1)");
  CHECK(P("a1").str_factor() == "a1");
}

TEST_CASE("text round trip", "[poly]") {
  for (const char* s : {"0", "-3/7", "a1", "-4*a2^2*c1*c2", "a1^3*omega - 2/3*kappa + 5"}) {
    const Poly p = P(s);
    CHECK(P(p.str().c_str()) == p);
    CHECK(P(p.str().c_str()).str() == p.str());
  }
}

TEST_CASE("parse errors carry a position", "[poly]") {
  try {
    P("a1 + * 2");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(P("zeta"), ParseError);
  CHECK_THROWS_AS(P("(a1"), ParseError);
  CHECK_THROWS_AS(P("a1 / 0"), Error);
}

TEST_CASE("substitution", "[poly]") {
  const Poly pk = P("-4*a2^2*c1*c2");
  const Assignment w = {{"a2", Poly(1)}, {"c1", Poly(1)}, {"c2", Poly(Rational(1, 4))}};
  CHECK(substitute(pk, w) == Poly(-1));
  CHECK(substitute(var("omega"), {}) == var("omega"));
  const Assignment t1 = {{"a1", Poly(Rational(-1, 4))},
                         {"a2", Poly(1)},
                         {"c1", Poly(1)},
                         {"c2", Poly(Rational(1, 4))}};
  CHECK(substitute(P("a1*c1 + a2*c2"), t1).is_zero());
  // A polynomial value is substituted as a whole.
  CHECK(substitute(P("a1^2 + a2"), {{"a1", P("a2 + 1")}}) == P("a2^2 + 3*a2 + 1"));
}

TEST_CASE("limit eps -> 0", "[poly]") {
  const ContextPtr c = ParamContext::make({"a1", "omega", "kappa", "eps"}, "eps");
  const Poly eps = Poly::variable(c, "eps");
  CHECK(limit_eps_zero(eps * Poly::variable(c, "a1") + 2) == Poly(2));
  try {
    limit_eps_zero(Poly::variable(c, "eps", -1));
    FAIL("no divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.power() == -1);
  }
  CHECK(limit_eps_zero(eps * eps * Poly::variable(c, "omega") + Poly::variable(c, "kappa")) ==
        Poly::variable(c, "kappa"));
}

TEST_CASE("power rules and coefficient extraction", "[poly]") {
  const std::array rules{PowerRule{"a1", 2, Poly(-1)}};
  CHECK(reduce(P("a1^3 + a1^2*c1"), rules) == P("-a1 - c1"));
  CHECK(reduce(P("a1"), rules) == P("a1"));
  const Poly p = P("omega^2*a1 + 3*omega*a2 + 7");
  CHECK(coefficient_of_power(p, "omega", 0) == Poly(7));
  CHECK(coefficient_of_power(p, "omega", 1) == P("3*a2"));
  CHECK(coefficient_of_power(p, "omega", 2) == P("a1"));
  CHECK(p.max_degree_in("omega") == 2);
  CHECK(p.min_degree_in("omega") == 0);
}

TEST_CASE("embedding into a wider context", "[poly]") {
  const ContextPtr narrow = ParamContext::make({"a1"});
  const Poly p = parse_poly("2*a1^2 - 1", narrow);
  const Poly q = embed(p, ctx());
  CHECK(q.context() == ctx());
  CHECK(q == P("2*a1^2 - 1"));
  CHECK(p == q);
  CHECK_THROWS_AS(embed(P("a2"), narrow), ContextMismatch);
}

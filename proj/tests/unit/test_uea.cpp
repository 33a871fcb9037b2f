#include <catch2/catch.hpp>

#include "liexp/catalog.hpp"
#include "liexp/expression.hpp"
#include "liexp/uea.hpp"

using namespace liexp;

namespace {

UEAElement word(const AlgebraPtr& alg, std::initializer_list<const char*> names) {
  Letters w;
  for (const char* n : names) w.push_back(static_cast<std::uint16_t>(alg->require(n)));
  return normal_form(alg, {Word{w, Poly(1)}});
}

UEAElement E(const AlgebraPtr& alg, const char* text) { return parse_element(text, alg); }

}  // namespace

TEST_CASE("normal ordering single rewrites", "[uea]") {
  const auto g = catalog("galilei");
  const auto ge = catalog("galilei_ext");
  CHECK(word(ge, {"K1", "P1"}).str() == "P1*K1 - m*Xi");
  CHECK(word(g, {"P1", "K1"}).str() == "P1*K1");
  CHECK(word(g, {"J1", "J2"}).str() == "J1*J2");
  CHECK(word(g, {"J2", "J1"}).str() == "J1*J2 - J3");
  CHECK(word(g, {}).str() == "1");
  CHECK(normal_form(g, {}).is_zero());
}

TEST_CASE("normal ordering cascades", "[uea]") {
  const auto g = catalog("galilei");
  // J2 J2 J1 = J2 (J1 J2 - J3) = (J1 J2 - J3) J2 - J2 J3 = J1 J2^2 - 2 J2 J3 + J1
  CHECK(word(g, {"J2", "J2", "J1"}) == E(g, "J1*J2^2 - 2*J2*J3 + J1"));
  // K1 H = H K1 + [K1,H] = H K1 + P1
  CHECK(word(g, {"K1", "H"}) == E(g, "H*K1 + P1"));
  // J3 K1 H = J3 (H K1 + P1) = H J3 K1 ... = H K1 J3 + H K2 + P1 J3 + P2
  CHECK(word(g, {"J3", "K1", "H"}) == E(g, "H*K1*J3 + H*K2 + P1*J3 + P2"));
}

TEST_CASE("words with equal letters merge before rewriting", "[uea]") {
  const auto g = catalog("galilei");
  const std::uint16_t j1 = 7, j2 = 8;
  const UEAElement z = normal_form(g, {Word{{j2, j1}, Poly(1)}, Word{{j2, j1}, Poly(-1)}});
  CHECK(z.is_zero());
  const UEAElement two = normal_form(g, {Word{{j2, j1}, Poly(1)}, Word{{j2, j1}, Poly(1)}});
  CHECK(two == E(g, "2*J1*J2 - 2*J3"));
}

TEST_CASE("products", "[uea]") {
  const auto g = catalog("galilei");
  const UEAElement x = E(g, "H + 2*J1*K3 - P2");
  CHECK(product(UEAElement::unit(g), x) == x);
  CHECK(product(x, UEAElement::unit(g)) == x);
  CHECK(product(UEAElement(g), x).is_zero());
  const UEAElement h = UEAElement::generator(g, "H");
  CHECK(product(h, h).str() == "H^2");
  CHECK(power(h, 3).str() == "H^3");
  CHECK(power(x, 0) == UEAElement::unit(g));
  // P and K commute with P, so P1 W1 = P1 (P3 K2 - P2 K3) needs no corrections.
  CHECK(product(UEAElement::generator(g, "P1"), named_element(g, "W1")) ==
        E(g, "P1*P3*K2 - P1*P2*K3"));
  CHECK(x.degree() == 2);
  CHECK(UEAElement(g).degree() == -1);
  CHECK_THROWS_AS(product(x, UEAElement::unit(catalog("poincare"))), AlgebraMismatch);
}

TEST_CASE("commutators", "[uea]") {
  const auto g = catalog("galilei");
  CHECK(commutator(named_element(g, "JP"), UEAElement::generator(g, "K1")) ==
        named_element(g, "W1"));
  CHECK(commutator(named_element(g, "W1"), named_element(g, "W2")).is_zero());
  const UEAElement x = E(g, "H*J1 + P2*K3");
  CHECK(commutator(x, x).is_zero());
  CHECK(commutator(UEAElement::generator(g, "J1"), UEAElement::generator(g, "J2")) ==
        UEAElement::generator(g, "J3"));
}

TEST_CASE("named elements", "[uea]") {
  const auto g = catalog("galilei");
  CHECK(named_element(g, "W1") == E(g, "P3*K2 - P2*K3"));
  CHECK(named_element(catalog("poincare"), "C1") ==
        E(catalog("poincare"), "P1^2 + P2^2 + P3^2 + omega*H^2"));
  const auto nh = catalog("newton_hooke");
  CHECK(named_element(nh, "C2") == E(nh, "<W1>^2 + <W2>^2 + <W3>^2"));
  CHECK_THROWS_AS(named_element(g, "W4"), Error);
  const auto keys = named_keys(*g);
  CHECK(std::find(keys.begin(), keys.end(), "C2") != keys.end());
}

TEST_CASE("centrality", "[uea]") {
  const auto g = catalog("galilei");
  CHECK(is_central(E(g, "P1*P1 + P2*P2 + P3*P3")).central);
  CHECK(is_central(E(g, "<W1>^2 + <W2>^2 + <W3>^2")).central);
  const Centrality h = is_central(UEAElement::generator(g, "H"));
  CHECK_FALSE(h.central);
  REQUIRE(h.witness);
  CHECK(g->generators()[*h.witness] == "K1");
  REQUIRE(h.residual);
  CHECK(h.residual->str() == "-P1");
  CHECK(is_central(UEAElement::generator(catalog("galilei_ext"), "Xi")).central);
}

TEST_CASE("linear elements and transport", "[uea]") {
  const auto g = catalog("galilei");
  const auto lin = as_linear(E(g, "2*H - P3"));
  REQUIRE(lin);
  CHECK(format_vector(*g, *lin) == "2*H - P3");
  CHECK_FALSE(as_linear(E(g, "H*P1")));
  CHECK_FALSE(as_linear(E(g, "H + 1")));
  CHECK(from_linear(g, *lin) == E(g, "2*H - P3"));

  // K1 K2 - K2 K1 is 0 in Galilei and omega J3 in Poincare.
  const auto p = catalog("poincare");
  FormalSum f(g);
  f.add({4, 5}, 1);
  f.add({5, 4}, -1);
  CHECK(f.normal_form().is_zero());
  CHECK(f.transported(p).normal_form() == E(p, "omega*J3"));
  CHECK(transport(E(g, "K2*K1"), p) == E(p, "K1*K2"));
}

TEST_CASE("substitution and power rules on elements", "[uea]") {
  const auto p = catalog("poincare");
  const UEAElement c1 = named_element(p, "C1");
  const UEAElement s = substitute(c1, {{"omega", Poly(-1)}});
  CHECK(s.str() == "-H^2 + P1^2 + P2^2 + P3^2");
  CHECK(substitute(c1, {{"omega", Poly(0)}}) == E(p, "<PP>"));
}

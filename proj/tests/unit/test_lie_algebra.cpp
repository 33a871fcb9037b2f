#include <catch2/catch.hpp>

#include "liexp/catalog.hpp"
#include "liexp/lie_algebra.hpp"

using namespace liexp;

namespace {

std::string br(const LieAlgebra& alg, const char* x, const char* y) {
  return format_vector(alg, bracket(alg, alg.basis_vector(alg.require(x)),
                                    alg.basis_vector(alg.require(y))));
}

// Galilei by hand, with [H,K1] optionally flipped.
LieAlgebra hand_galilei(int hk1_sign) {
  LieAlgebra::Builder b("g", {"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"}, nullptr);
  const char* P[] = {"P1", "P2", "P3"};
  const char* K[] = {"K1", "K2", "K3"};
  const char* J[] = {"J1", "J2", "J3"};
  for (int i = 0; i < 3; ++i) {
    b.add("H", K[i], {{P[i], Poly(i == 0 ? hk1_sign : -1)}});
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    b.add(J[i], J[j], {{J[k], Poly(1)}});
    b.add(J[i], P[j], {{P[k], Poly(1)}});
    b.add(J[i], K[j], {{K[k], Poly(1)}});
    b.add(P[i], J[j], {{P[k], Poly(1)}});
    b.add(K[i], J[j], {{K[k], Poly(1)}});
  }
  return b.build();
}

}  // namespace

TEST_CASE("catalog contents", "[lie]") {
  const auto g = catalog("galilei");
  CHECK(g->dim() == 10);
  CHECK(g->generators().front() == "H");
  CHECK(br(*g, "J1", "J2") == "J3");
  CHECK(br(*g, "H", "K1") == "-P1");
  CHECK(br(*g, "K1", "H") == "P1");
  CHECK(br(*g, "P1", "P2") == "0");
  CHECK(br(*g, "P1", "K1") == "0");
  CHECK(g->metadata().at("isomorphism").find("iiso(3)") == 0);

  const auto ge = catalog("galilei_ext");
  CHECK(ge->dim() == 11);
  CHECK(ge->generators().front() == "Xi");
  CHECK(br(*ge, "P1", "K1") == "m*Xi");
  CHECK(br(*ge, "P1", "K2") == "0");
  CHECK(br(*ge, "Xi", "H") == "0");

  const auto p = catalog("poincare");
  CHECK(br(*p, "K1", "K2") == "omega*J3");
  CHECK(br(*p, "H", "K1") == "-P1");
  const auto nh = catalog("newton_hooke");
  CHECK(br(*nh, "H", "P1") == "kappa*K1");

  CHECK(catalog_names().size() == 5);
  CHECK_THROWS_AS(catalog("sl2"), Error);
}

TEST_CASE("antisymmetry", "[lie]") {
  for (const auto& name : catalog_names()) {
    const auto a = catalog(name);
    for (std::size_t i = 0; i < a->dim(); ++i) {
      CHECK(a->structure(i, i).empty());
      for (std::size_t j = 0; j < a->dim(); ++j) {
        const Vector x = bracket(*a, a->basis_vector(i), a->basis_vector(j));
        const Vector y = bracket(*a, a->basis_vector(j), a->basis_vector(i));
        Vector sum = a->zero_vector();
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = x[k] + y[k];
        CHECK(is_zero(sum));
      }
    }
  }
}

TEST_CASE("builder rejects inconsistent input", "[lie]") {
  LieAlgebra::Builder b("t", {"X", "Y"}, nullptr);
  CHECK_THROWS_AS(b.add("X", "X", {{"Y", Poly(1)}}), Error);
  CHECK_THROWS_AS(b.add("X", "Z", {{"Y", Poly(1)}}), Error);
  CHECK_THROWS_AS(LieAlgebra::Builder("t", {"X", "X"}, nullptr), Error);
  // [Y,X] is stored as -[X,Y].
  b.add("Y", "X", {{"Y", Poly(2)}});
  const LieAlgebra a = b.build();
  CHECK(br(a, "X", "Y") == "-2*Y");
}

TEST_CASE("jacobi check", "[lie]") {
  for (const auto& name : catalog_names()) {
    INFO(name);
    CHECK(jacobi_check(*catalog(name)).empty());
  }
  CHECK(jacobi_check(hand_galilei(-1)).empty());
  CHECK(structure_difference(hand_galilei(-1), *catalog("galilei")) == std::nullopt);

  const auto bad = jacobi_check(hand_galilei(+1));
  REQUIRE_FALSE(bad.empty());
  // [H,K1,J2]: [[H,K1],J2] = [P1,J2] = P3, [[K1,J2],H] = [K3,H] = P3.
  const auto& v = bad.front();
  const LieAlgebra g = hand_galilei(+1);
  CHECK(g.generators()[v.i] == "H");
  CHECK(g.generators()[v.j] == "K1");
  CHECK(g.generators()[v.k] == "J2");
  CHECK(format_vector(g, v.residual) == "2*P3");
}

TEST_CASE("parity automorphisms", "[lie]") {
  for (const char* name : {"galilei", "galilei_ext", "poincare", "newton_hooke", "euclid4"}) {
    INFO(name);
    const auto a = catalog(name);
    CHECK(automorphism_check(*a, parity(*a)).ok);
    CHECK(automorphism_check(*a, parity_time_reversal(*a)).ok);
    CHECK(automorphism_check(*a, LinearMap::identity(*a)).ok);
  }
  const auto g = catalog("galilei");
  // (-H, -P, K, J) and (H, -P, -K, J) written out.
  CHECK(automorphism_check(*g, LinearMap::diagonal(*g, {-1, -1, -1, -1, 1, 1, 1, 1, 1, 1})).ok);
  CHECK(automorphism_check(*g, LinearMap::diagonal(*g, {1, -1, -1, -1, -1, -1, -1, 1, 1, 1})).ok);
  // Flipping only H breaks [H,K] = -P.
  const CheckResult r = automorphism_check(*g, LinearMap::diagonal(*g, {-1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violation.empty());
  // A homomorphism that is not an involution.
  const CheckResult twice = automorphism_check(*g, LinearMap::diagonal(*g, {2, 2, 2, 2, 1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(twice.ok);
}

TEST_CASE("cartan decompositions", "[lie]") {
  const auto g = catalog("galilei");
  const auto st = decomposition_check(*g, spacetime_split(*g));
  CHECK(st.hh_in_h);
  CHECK(st.hp_in_p);
  CHECK(st.pp == Containment::Zero);
  CHECK(decomposition_check(*g, worldline_split(*g)).pp == Containment::Zero);

  const auto p = catalog("poincare");
  const auto wl = decomposition_check(*p, worldline_split(*p));
  CHECK(wl.hh_in_h);
  CHECK(wl.hp_in_p);
  CHECK(wl.pp == Containment::InH);

  const auto nh = catalog("newton_hooke");
  const auto ns = decomposition_check(*nh, spacetime_split(*nh));
  CHECK(ns.hh_in_h);
  CHECK(ns.hp_in_p);
  CHECK(ns.pp == Containment::InH);

  // p = (J) is not a symmetric split.
  const auto odd = decomposition_check(*g, make_decomposition(*g, {"J1", "J2", "J3"}));
  CHECK(odd.pp == Containment::Other);
  CHECK_THROWS_AS(make_decomposition(*g, {"Q"}), Error);
}

TEST_CASE("contractions", "[lie]") {
  const auto g = catalog("galilei");
  const auto p = catalog("poincare");
  const auto nh = catalog("newton_hooke");

  CHECK(structure_difference(parameter_contract(*p, "omega"), *g) == std::nullopt);
  CHECK(structure_difference(parameter_contract(*nh, "kappa"), *g) == std::nullopt);
  CHECK(structure_difference(parameter_contract(*g, "omega"), *g) == std::nullopt);
  CHECK(parameter_contract(*p, "omega").metadata().at("parameter_contraction") == "omega=0");

  const LieAlgebra p1 = specialize(*p, {{"omega", Poly(-1)}});
  CHECK(p1.metadata().at("fixed.omega") == "-1");
  CHECK(br(p1, "K1", "K2") == "-J3");
  CHECK(structure_difference(iw_contract(p1, worldline_split(p1)), *g) == std::nullopt);

  const LieAlgebra n1 = specialize(*nh, {{"kappa", Poly(1)}});
  CHECK(structure_difference(iw_contract(n1, spacetime_split(n1)), *g) == std::nullopt);

  // Nothing to kill in an abelian algebra.
  const LieAlgebra ab = LieAlgebra::Builder("ab", {"X", "Y", "Z"}, nullptr).build();
  CHECK(structure_difference(iw_contract(ab, make_decomposition(ab, {"X"})), ab) == std::nullopt);

  // [h,h] landing in p diverges.
  LieAlgebra::Builder b("d", {"X", "Y", "Z"}, nullptr);
  b.add("X", "Y", {{"Z", Poly(1)}});
  const LieAlgebra d = b.build();
  CHECK_THROWS_AS(iw_contract(d, make_decomposition(d, {"Z"})), DivergenceError);
}

TEST_CASE("structure difference names the first differing bracket", "[lie]") {
  const auto p = catalog("poincare");
  const auto diff = structure_difference(*p, *catalog("galilei"));
  REQUIRE(diff);
  CHECK(diff->find("omega") != std::string::npos);
  CHECK(structure_difference(*catalog("galilei"), *catalog("galilei_ext")) ==
        std::optional<std::string>("generator lists differ"));
}

#include "liexp/catalog.hpp"

#include <fmt/format.h>

namespace liexp {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (1,2,3).
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) ||
      (i == 3 && j == 1 && k == 2))
    return 1;
  return -1;
}

std::string gen(char family, int i) { return fmt::format("{}{}", family, i); }

std::vector<std::string> kinematical_basis(bool central) {
  std::vector<std::string> g;
  if (central) g.emplace_back("Xi");
  g.emplace_back("H");
  for (char f : {'P', 'K', 'J'})
    for (int i = 1; i <= 3; ++i) g.push_back(gen(f, i));
  return g;
}

// Brackets shared by every kinematical algebra here: rotations act on
// vectors, and [H, K_i] = -P_i.
void add_common(LieAlgebra::Builder& b) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const int k = 6 - i - j;
      const Poly e(levi_civita(i, j, k));
      if (i < j) b.add(gen('J', i), gen('J', j), {{gen('J', k), e}});
      b.add(gen('J', i), gen('P', j), {{gen('P', k), e}});
      b.add(gen('J', i), gen('K', j), {{gen('K', k), e}});
    }
  }
  for (int i = 1; i <= 3; ++i) b.add("H", gen('K', i), {{gen('P', i), Poly(-1)}});
}

AlgebraPtr make(std::string_view name) {
  if (name == "galilei") {
    LieAlgebra::Builder b("galilei", kinematical_basis(false), ParamContext::make({}));
    add_common(b);
    b.metadata("isomorphism", "iiso(3) = t4 (.) (t3 (.) so(3))")
        .metadata("space.1", "IISO(3)/ISO(3)")
        .metadata("space.1.dim", "3+1")
        .metadata("space.1.curv", "0")
        .metadata("space.2", "IISO(3)/(R x SO(3))")
        .metadata("space.2.dim", "3+3")
        .metadata("space.2.curv", "0");
    return b.build_shared();
  }
  if (name == "galilei_ext") {
    auto ctx = ParamContext::make({"m"});
    LieAlgebra::Builder b("galilei_ext", kinematical_basis(true), ctx);
    add_common(b);
    const Poly m = Poly::variable(ctx, "m");
    for (int i = 1; i <= 3; ++i) b.add(gen('P', i), gen('K', i), {{"Xi", m}});
    b.metadata("isomorphism", "centrally extended iiso(3)")
        .metadata("central", "Xi")
        .metadata("space.1", "IISO(3)/ISO(3)")
        .metadata("space.1.dim", "3+1")
        .metadata("space.1.curv", "0")
        .metadata("space.2", "IISO(3)/(R x SO(3))")
        .metadata("space.2.dim", "3+3")
        .metadata("space.2.curv", "0");
    return b.build_shared();
  }
  if (name == "poincare" || name == "euclid4") {
    auto ctx = ParamContext::make({"omega"});
    LieAlgebra::Builder b(std::string(name), kinematical_basis(false), ctx);
    add_common(b);
    const Poly w = Poly::variable(ctx, "omega");
    for (int i = 1; i <= 3; ++i) b.add(gen('P', i), gen('K', i), {{"H", w}});
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        const int k = 6 - i - j;
        b.add(gen('K', i), gen('K', j), {{gen('J', k), w * Poly(levi_civita(i, j, k))}});
      }
    if (name == "poincare") {
      b.metadata("isomorphism", "iso(3,1)")
          .metadata("curvature", "omega = -1/c^2 < 0")
          .metadata("space.1", "ISO(3,1)/SO(3,1)")
          .metadata("space.1.dim", "3+1")
          .metadata("space.1.curv", "0")
          .metadata("space.2", "ISO(3,1)/(R x SO(3))")
          .metadata("space.2.dim", "3+3")
          .metadata("space.2.curv", "omega");
    } else {
      b.metadata("isomorphism", "iso(4)")
          .metadata("curvature", "omega > 0")
          .metadata("space.1", "ISO(4)/SO(4)")
          .metadata("space.1.dim", "4")
          .metadata("space.1.curv", "0")
          .metadata("space.2", "ISO(4)/(R x SO(3))")
          .metadata("space.2.dim", "6")
          .metadata("space.2.curv", "omega");
    }
    return b.build_shared();
  }
  if (name == "newton_hooke") {
    auto ctx = ParamContext::make({"kappa"});
    LieAlgebra::Builder b("newton_hooke", kinematical_basis(false), ctx);
    add_common(b);
    const Poly k = Poly::variable(ctx, "kappa");
    for (int i = 1; i <= 3; ++i) b.add("H", gen('P', i), {{gen('K', i), k}});
    b.metadata("isomorphism", "t6(so(2) + so(3)) for kappa > 0, t6(so(1,1) + so(3)) for kappa < 0")
        .metadata("curvature", "kappa = +-1/tau^2")
        .metadata("space.1", "N/ISO(3)")
        .metadata("space.1.dim", "3+1")
        .metadata("space.1.curv", "kappa")
        .metadata("space.2", "N/(SO(2) x SO(3)) or N/(SO(1,1) x SO(3))")
        .metadata("space.2.dim", "3+3")
        .metadata("space.2.curv", "0");
    return b.build_shared();
  }
  throw Error("unknown catalog algebra '" + std::string(name) + "'");
}

std::vector<int> family_signs(const LieAlgebra& alg, int h, int p, int k, int j, int xi) {
  std::vector<int> s;
  for (const auto& g : alg.generators()) {
    switch (g[0]) {
      case 'H': s.push_back(h); break;
      case 'P': s.push_back(p); break;
      case 'K': s.push_back(k); break;
      case 'J': s.push_back(j); break;
      case 'X': s.push_back(xi); break;
      default: throw Error("generator '" + g + "' is not kinematical");
    }
  }
  return s;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"galilei", "galilei_ext", "poincare",
                                                  "newton_hooke", "euclid4"};
  return names;
}

AlgebraPtr catalog(std::string_view name) {
  AlgebraPtr alg = make(name);
  auto bad = jacobi_check(*alg);
  if (!bad.empty())
    throw Error(fmt::format("catalog algebra {} violates Jacobi at ({},{},{})", name,
                            alg->generators()[bad[0].i], alg->generators()[bad[0].j],
                            alg->generators()[bad[0].k]));
  return alg;
}

LinearMap parity(const LieAlgebra& alg) {
  return LinearMap::diagonal(alg, family_signs(alg, 1, -1, -1, 1, 1));
}

LinearMap parity_time_reversal(const LieAlgebra& alg) {
  return LinearMap::diagonal(alg, family_signs(alg, -1, -1, 1, 1, -1));
}

Decomposition spacetime_split(const LieAlgebra& alg) {
  return make_decomposition(alg, {"H", "P1", "P2", "P3"}, "PiT");
}

Decomposition worldline_split(const LieAlgebra& alg) {
  return make_decomposition(alg, {"P1", "P2", "P3", "K1", "K2", "K3"}, "Pi");
}

}  // namespace liexp

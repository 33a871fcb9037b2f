#include "liexp/corpus.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "liexp/catalog.hpp"
#include "liexp/expression.hpp"

namespace liexp {

namespace {

struct Cyclic {
  int i, j, k;
};

Cyclic cyc(int i) { return {i, i % 3 + 1, (i % 3 + 1) % 3 + 1}; }

// X_j W_k - X_k W_j for the cyclic (i, j, k).
std::string cross(char x, int i) {
  const auto [a, j, k] = cyc(i);
  return fmt::format("({0}{1}*<W{2}> - {0}{2}*<W{1}>)", x, j, k);
}

std::vector<Identity> build() {
  std::vector<Identity> out;
  auto add = [&out](std::string group, std::string id, std::string lhs, std::string rhs) {
    out.push_back({std::move(group), std::move(id), std::move(lhs), std::move(rhs)});
  };

  for (char x : {'P', 'K'}) {
    add("scalar", fmt::format("{}W", x),
        fmt::format("{0}1*<W1> + {0}2*<W2> + {0}3*<W3>", x), "0");
  }
  for (char x : {'P', 'K'}) {
    add("squared", fmt::format("{}", x),
        fmt::format("-2*{0}1*{0}2*<W1>*<W2> - 2*{0}1*{0}3*<W1>*<W3> - 2*{0}2*{0}3*<W2>*<W3>", x),
        fmt::format("{0}1^2*<W1>^2 + {0}2^2*<W2>^2 + {0}3^2*<W3>^2", x));
    for (int i = 1; i <= 3; ++i) {
      const auto [a, j, k] = cyc(i);
      const int lo = std::min(j, k), hi = std::max(j, k);
      add("component", fmt::format("{}{}", x, i),
          fmt::format("{0}{1}^2*<W{1}>^2 - {0}{2}^2*<W{2}>^2 - {0}{3}^2*<W{3}>^2"
                      " - 2*{0}{2}*{0}{3}*<W{2}>*<W{3}>",
                      x, i, lo, hi),
          "0");
    }
  }

  for (int i = 1; i <= 3; ++i) {
    add("W brackets", fmt::format("[W{},H]", i), fmt::format("[<W{}>, H]", i), "0");
    for (int j = 1; j <= 3; ++j) {
      std::string rhs = "0";
      if (i != j) {
        const int k = 6 - i - j;
        rhs = (cyc(i).j == j ? "" : "-") + fmt::format("<W{}>", k);
      }
      add("W brackets", fmt::format("[W{},J{}]", i, j), fmt::format("[<W{}>, J{}]", i, j), rhs);
      add("W brackets", fmt::format("[W{},P{}]", i, j), fmt::format("[<W{}>, P{}]", i, j), "0");
      add("W brackets", fmt::format("[W{},K{}]", i, j), fmt::format("[<W{}>, K{}]", i, j), "0");
      if (i < j)
        add("W brackets", fmt::format("[W{},W{}]", i, j), fmt::format("[<W{}>, <W{}>]", i, j), "0");
    }
  }

  add("JP brackets", "[JP,H]", "[<JP>, H]", "0");
  for (int i = 1; i <= 3; ++i) {
    add("JP brackets", fmt::format("[JP,J{}]", i), fmt::format("[<JP>, J{}]", i), "0");
    add("JP brackets", fmt::format("[JP,P{}]", i), fmt::format("[<JP>, P{}]", i), "0");
    add("JP brackets", fmt::format("[JP,K{}]", i), fmt::format("[<JP>, K{}]", i), fmt::format("<W{}>", i));
    add("JP brackets", fmt::format("[JP,W{}]", i), fmt::format("[<JP>, <W{}>]", i), "-" + cross('P', i));
  }

  add("JW brackets", "[JW,H]", "[<JW>, H]", "0");
  for (int i = 1; i <= 3; ++i) {
    add("JW brackets", fmt::format("[JW,J{}]", i), fmt::format("[<JW>, J{}]", i), "0");
    add("JW brackets", fmt::format("[JW,W{}]", i), fmt::format("[<JW>, <W{}>]", i), "0");
    add("JW brackets", fmt::format("[JW,P{}]", i), fmt::format("[<JW>, P{}]", i), cross('P', i));
    add("JW brackets", fmt::format("[JW,K{}]", i), fmt::format("[<JW>, K{}]", i), cross('K', i));
  }

  for (int i = 1; i <= 3; ++i) {
    add("JP on cross", fmt::format("[JP,P x W]{}", i), fmt::format("[<JP>, {}]", cross('P', i)),
        fmt::format("<C1>*<W{}>", i));
    add("JP on cross", fmt::format("[JP,K x W]{}", i), fmt::format("[<JP>, {}]", cross('K', i)),
        fmt::format("<KP>*<W{}>", i));
  }
  for (int i = 1; i <= 3; ++i) {
    add("JW on cross", fmt::format("[JW,P x W]{}", i), fmt::format("[<JW>, {}]", cross('P', i)),
        fmt::format("-<C2>*P{}", i));
    add("JW on cross", fmt::format("[JW,K x W]{}", i), fmt::format("[<JW>, {}]", cross('K', i)),
        fmt::format("-<C2>*K{}", i));
  }
  add("JW with JP", "[JW,JP]", "[<JW>, <JP>]",
      fmt::format("J1*{} + J2*{} + J3*{}", cross('P', 1), cross('P', 2), cross('P', 3)));
  return out;
}

}  // namespace

const std::vector<Identity>& appendix_identities() {
  static const std::vector<Identity> ids = build();
  return ids;
}

std::vector<IdentityOutcome> check_identities(const AlgebraPtr& alg,
                                              const std::vector<Identity>& identities) {
  std::vector<IdentityOutcome> out;
  for (const auto& id : identities) {
    const IdentityResult r = verify_identity(alg, id.lhs, id.rhs);
    out.push_back({id, r.ok, r.residual.str()});
  }
  return out;
}

std::vector<CentralityOutcome> casimir_centrality() {
  std::vector<CentralityOutcome> out;
  for (const auto& name : catalog_names()) {
    const AlgebraPtr alg = catalog(name);
    std::vector<std::pair<std::string, UEAElement>> elements;
    const auto keys = named_keys(*alg);
    for (const char* key : {"C1", "C2"})
      if (std::find(keys.begin(), keys.end(), key) != keys.end())
        elements.emplace_back(key, named_element(alg, key));
    if (alg->index_of("Xi")) elements.emplace_back("Xi", UEAElement::generator(alg, "Xi"));
    for (const auto& [key, x] : elements) {
      const Centrality c = is_central(x);
      CentralityOutcome o{name, key, c.central, {}};
      if (!c.central)
        o.detail = fmt::format("[{}, {}] = {}", key, alg->generators()[*c.witness],
                               c.residual->str());
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace liexp

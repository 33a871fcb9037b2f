#pragma once

#include <string>
#include <vector>

#include "liexp/uea.hpp"

namespace liexp {

/// An identity lhs = rhs in the expression grammar, over the Galilei algebra.
struct Identity {
  std::string group;  // e.g. "JP brackets"
  std::string id;     // e.g. "[JP,K1]"
  std::string lhs;
  std::string rhs;
};

/// Relations of the enveloping Galilei algebra: the scalar
/// identities P.W = K.W = 0, their squared consequences for P and K, and the
/// bracket tables of W_i, J.P and J.W.
const std::vector<Identity>& appendix_identities();

struct IdentityOutcome {
  Identity identity;
  bool ok = false;
  std::string residual;
};

std::vector<IdentityOutcome> check_identities(const AlgebraPtr& alg,
                                              const std::vector<Identity>& identities);

struct CentralityOutcome {
  std::string algebra;
  std::string element;
  bool central = false;
  std::string detail;  // first non-commuting generator and the bracket
};

/// C1 and C2 for every catalog algebra that defines them, and Xi in the
/// extended Galilei algebra.
std::vector<CentralityOutcome> casimir_centrality();

}  // namespace liexp

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
//   liexp_acceptance [--seed N] [--cli path/to/liexp]

#include <fmt/format.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "liexp/catalog.hpp"
#include "liexp/contraction.hpp"
#include "liexp/corpus.hpp"
#include "liexp/expansion.hpp"
#include "liexp/properties.hpp"

using namespace liexp;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_ms;  // 0: no runtime bound
  std::function<void(Outcome&)> body;
};

AlgebraPtr over(const char* name, const ContextPtr& ctx) {
  return std::make_shared<const LieAlgebra>(catalog(name)->with_context(ctx));
}

void require_checks(Outcome& o, const ClosureReport& r) {
  for (const auto& c : r.checks) o.require(c.ok, fmt::format("{}: {} {}", r.driver, c.name, c.detail));
}

Rational val(const Witness& w, const char* name) {
  const auto it = w.values.find(name);
  if (it == w.values.end()) throw Error(fmt::format("witness has no value for {}", name));
  return *it->second.constant_value();
}

void structural(Outcome& o) {
  for (const char* name : {"galilei", "galilei_ext", "poincare", "newton_hooke"})
    o.require(jacobi_check(*catalog(name)).empty(), fmt::format("jacobi fails for {}", name));
  for (const char* name : {"galilei", "poincare", "newton_hooke"}) {
    const auto a = catalog(name);
    const CheckResult pi = automorphism_check(*a, parity(*a));
    const CheckResult pt = automorphism_check(*a, parity_time_reversal(*a));
    o.require(pi.ok, fmt::format("parity on {}: {}", name, pi.violation));
    o.require(pt.ok, fmt::format("parity-time on {}: {}", name, pt.violation));
  }
  const auto g = catalog("galilei");
  // The sign patterns written out: (-H,-P,K,J) and (H,-P,-K,J).
  o.require(automorphism_check(*g, LinearMap::diagonal(*g, {-1, -1, -1, -1, 1, 1, 1, 1, 1, 1})).ok,
            "diag(-H,-P,K,J) on galilei");
  o.require(automorphism_check(*g, LinearMap::diagonal(*g, {1, -1, -1, -1, -1, -1, -1, 1, 1, 1})).ok,
            "diag(H,-P,-K,J) on galilei");

  auto symmetric = [](const DecompositionReport& r) { return r.hh_in_h && r.hp_in_p; };
  const auto gs = decomposition_check(*g, spacetime_split(*g));
  const auto gw = decomposition_check(*g, worldline_split(*g));
  o.require(symmetric(gs) && gs.pp == Containment::Zero, "galilei spacetime split: [p,p] != 0");
  o.require(symmetric(gw) && gw.pp == Containment::Zero, "galilei worldline split: [p,p] != 0");
  const auto p = catalog("poincare");
  const auto pw = decomposition_check(*p, worldline_split(*p));
  o.require(symmetric(pw) && pw.pp == Containment::InH, "poincare worldline split: [p,p] not in h");
  const auto nh = catalog("newton_hooke");
  const auto ns = decomposition_check(*nh, spacetime_split(*nh));
  o.require(symmetric(ns) && ns.pp == Containment::InH, "newton_hooke spacetime split: [p,p] not in h");
}

void appendix(Outcome& o) {
  const auto& ids = appendix_identities();
  std::set<std::string> groups;
  std::size_t passed = 0;
  for (const auto& r : check_identities(catalog("galilei"), ids)) {
    groups.insert(r.identity.group);
    passed += r.ok;
    o.require(r.ok, fmt::format("{} {}: residual {}", r.identity.group, r.identity.id, r.residual));
  }
  o.require(groups.size() == 9, fmt::format("{} identity groups, expected 9", groups.size()));
  o.notes.push_back(fmt::format("{}/{} identities", passed, ids.size()));
}

void centrality(Outcome& o) {
  std::set<std::string> seen;
  for (const auto& c : casimir_centrality()) {
    seen.insert(c.algebra + ":" + c.element);
    o.require(c.central, fmt::format("{} in {} not central: {}", c.element, c.algebra, c.detail));
  }
  for (const char* need : {"galilei:C1", "galilei:C2", "poincare:C1", "poincare:C2",
                           "newton_hooke:C1", "newton_hooke:C2", "galilei_ext:Xi"})
    o.require(seen.count(need) == 1, fmt::format("{} not checked", need));
}

void theorem1(Outcome& o) {
  const Witness w = theorem1_witness();
  const Rational a1 = val(w, "a1"), a2 = val(w, "a2"), c1 = val(w, "c1"), c2 = val(w, "c2");
  const Rational om = val(w, "omega");
  o.require(a1 * c1 + a2 * c2 == 0 && 4 * a2 * a2 * c1 * c2 + om == 0,
            "witness does not solve the constraints");

  // Template identities, recomputed here with a1, a2 symbolic.
  const ContextPtr ctx = ParamContext::make({"a1", "a2", "c1", "c2", "omega"});
  const AlgebraPtr g = over("galilei", ctx);
  const AlgebraPtr target = over("poincare", ctx);
  const Seed seed = build_seed(
      {decompose_casimir(formal_named_element(target, "C1"), g, "omega"),
       decompose_casimir(formal_named_element(target, "C2"), g, "omega")},
      {"a1", "a2"});
  const ExpandedGenerators x = derive_generators(g, seed);
  auto img = [&](const char* n) { return x.images[g->require(n)]; };
  auto E = [&](const char* t) { return parse_element(t, g); };
  o.require(commutator(img("P1"), img("P2")).is_zero(), "[P1',P2'] != 0");
  o.require(commutator(img("P1"), img("K2")).is_zero(), "[P1',K2'] != 0");
  o.require(commutator(img("P1"), img("K1")) == E("-4*a2^2*H*<C1>*<C2>"),
            "[P1',K1'] != -4 a2^2 H C1 C2");
  o.require(commutator(img("K1"), img("K2")) ==
                E("-8*a2*H*(a1*<C1> + a2*<C2>)*<W3> - 4*a2^2*<C1>*<C2>*J3"),
            "[K1',K2'] template");

  const ClosureReport r = run_theorem1(w);
  o.require(r.closed(), "poincare: " + r.first_failure);
  o.require(r.pairs.size() == 45 && r.count(Verdict::Mismatch) == 0,
            fmt::format("{} pairs, {} mismatches", r.pairs.size(), r.count(Verdict::Mismatch)));
  require_checks(o, r);
  o.notes.push_back(fmt::format("45 brackets: {} exact zero, {} template match",
                                r.count(Verdict::ExactZero), r.count(Verdict::TemplateMatch)));
}

void euclid(Outcome& o) {
  const Witness w = euclid_witness();
  o.require(val(w, "omega") > 0, "euclidean witness needs omega > 0");
  const ClosureReport r = run_euclid(w);
  o.require(r.target == "euclid4", "target is " + r.target);
  o.require(r.closed(), "euclid4: " + r.first_failure);
  o.require(r.pairs.size() == 45 && r.count(Verdict::Mismatch) == 0, "euclid4 mismatches");
  require_checks(o, r);
}

void theorem2(Outcome& o) {
  const Witness w = theorem2_witness();
  const Rational a1 = val(w, "a1"), m = val(w, "m"), xi = val(w, "xi");
  o.require(4 * a1 * a1 * m * m * xi * xi + val(w, "kappa") == 0,
            "witness does not solve the constraint");

  const ContextPtr ctx = ParamContext::make({"a1", "a2", "m", "xi", "kappa"});
  const AlgebraPtr g = over("galilei_ext", ctx);
  const AlgebraPtr target = over("newton_hooke", ctx);
  const Seed seed = build_seed(
      {decompose_casimir(formal_named_element(target, "C1"), g, "kappa"),
       decompose_casimir(formal_named_element(target, "C2"), g, "kappa")},
      {"a1", "a2"});
  o.require(seed.element == parse_element("a1*<KK>", g), "seed is not a1 K^2");
  const ExpandedGenerators x = derive_generators(g, seed);
  for (int i = 1; i <= 3; ++i) {
    const UEAElement hp = commutator(x.images[g->require("H")],
                                     x.images[g->require(fmt::format("P{}", i))]);
    o.require(hp == parse_element(fmt::format("-4*a1^2*m^2*Xi^2*K{}", i), g),
              fmt::format("[H',P{}'] != -4 a1^2 m^2 Xi^2 K{}", i, i));
  }

  const ClosureReport r = run_theorem2(w);
  o.require(r.closed(), "newton_hooke: " + r.first_failure);
  require_checks(o, r);
  const ClosureReport f = run_theorem2_formal();
  o.require(f.closed(), "formal kappa=+1: " + f.first_failure);
  require_checks(o, f);
  bool rule = false;
  for (const auto& [k, v] : f.witness) rule = rule || (k == "a1^2" && v == "-1");
  o.require(rule && !f.notes.empty(), "formal run does not record a1^2 = -1");
  o.notes.push_back(fmt::format("{} pairs at kappa=-1, {} pairs at kappa=+1 (a1 formal)",
                                r.pairs.size(), f.pairs.size()));
}

void negative(Outcome& o, const std::string& cli) {
  const ClosureReport r = run_negative_nh();
  o.require(!r.closed(), "negative control closed");
  o.require(r.as_expected(), "negative control did not fail as expected");
  o.require(r.count(Verdict::Mismatch) > 0 && !r.first_failure.empty(), "no mismatching bracket named");
  require_checks(o, r);
  o.notes.push_back(r.first_failure);
  if (!cli.empty()) {
    const int status = std::system((cli + " expand negative-nh > /dev/null").c_str());
    o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
              fmt::format("liexp expand negative-nh exited {}", WEXITSTATUS(status)));
  }
}

void contraction(Outcome& o) {
  const auto g = catalog("galilei");
  const auto p = catalog("poincare");
  const auto nh = catalog("newton_hooke");
  auto same = [&](const LieAlgebra& a, const char* what) {
    const auto d = structure_difference(a, *g);
    o.require(!d, fmt::format("{}: {}", what, d.value_or("")));
  };
  same(parameter_contract(*p, "omega"), "poincare, omega -> 0");
  same(parameter_contract(*nh, "kappa"), "newton_hooke, kappa -> 0");
  const LieAlgebra p1 = specialize(*p, {{"omega", Poly(-1)}});
  same(iw_contract(p1, worldline_split(p1)), "poincare at omega=-1, worldline split");
}

void properties(Outcome& o, std::uint64_t seed) {
  const PropertyOptions opts;  // 200 ring, 100 per algebra otherwise
  std::size_t samples = 0;
  for (const auto& r : run_properties(seed, opts)) {
    samples += r.samples;
    o.require(r.ok(), fmt::format("{}: {} failures, first {}", r.name, r.failures, r.first_failure));
    const std::size_t need = r.name.find("(coeffring)") != std::string::npos ? 200 : 100;
    if (r.name.rfind("ring axioms", 0) == 0 || r.name.rfind("product associativity", 0) == 0 ||
        r.name.rfind("UEA Jacobi", 0) == 0)
      o.require(r.samples >= need, fmt::format("{}: only {} samples", r.name, r.samples));
  }
  o.notes.push_back(fmt::format("{} samples, seed {}", samples, seed));
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = std::random_device{}();
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (!std::strcmp(argv[i], "--cli") && i + 1 < argc) {
      cli = argv[++i];
    } else {
      fmt::print(stderr, "usage: {} [--seed N] [--cli PATH]\n", argv[0]);
      return 2;
    }
  }
  fmt::print("seed: {}\n", seed);

  const std::vector<Criterion> criteria = {
      {1, "structural suite", 1000, structural},
      {2, "appendix corpus", 5000, appendix},
      {3, "Casimir centrality", 0, centrality},
      {4, "Galilei -> Poincare expansion", 10000, theorem1},
      {5, "Euclidean variant", 0, euclid},
      {6, "extended Galilei -> Newton-Hooke expansion", 0, theorem2},
      {7, "negative control", 0, [&](Outcome& o) { negative(o, cli); }},
      {8, "contraction round trips", 1000, contraction},
      {9, "property suite", 0, [&](Outcome& o) { properties(o, seed); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0)
      o.require(ms < c.limit_ms, fmt::format("took {:.0f} ms, limit {:.0f} ms", ms, c.limit_ms));
    failed += !o.ok;
    fmt::print("{} criterion {}: {} ({:.1f} ms)", o.ok ? "PASS" : "FAIL", c.number, c.title, ms);
    if (!o.notes.empty()) fmt::print(" - {}", o.notes.front());
    fmt::print("\n");
    if (!o.ok)
      for (std::size_t i = 0; i < o.notes.size(); ++i) fmt::print("    {}\n", o.notes[i]);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

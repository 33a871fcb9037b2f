#include "liexp/expansion.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <array>
#include <chrono>

#include "liexp/catalog.hpp"

namespace liexp {

namespace {

AlgebraPtr share(LieAlgebra alg) { return std::make_shared<const LieAlgebra>(std::move(alg)); }

AlgebraPtr over(std::string_view name, const ContextPtr& ctx) {
  return share(catalog(name)->with_context(ctx));
}

int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  // indices 1..3
  if (i == j || j == k || i == k) return 0;
  const bool even = (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
  return even ? 1 : -1;
}

NamedCheck equality_check(std::string name, const UEAElement& actual, const UEAElement& expected) {
  NamedCheck c{std::move(name), actual == expected, {}};
  if (!c.ok) c.detail = "residual " + (actual - expected).str();
  return c;
}

std::string render(const LieAlgebra& alg, const Vector& v) { return format_vector(alg, v); }

}  // namespace

UEAElement CasimirDecomposition::recombined() const {
  const auto& alg = base.algebra();
  const Poly w = Poly::variable(alg->context(), curvature);
  return base + linear.scaled(w) + quadratic.scaled(w * w);
}

CasimirDecomposition decompose_casimir(const FormalSum& target_casimir, const AlgebraPtr& initial,
                                       std::string_view curvature) {
  if (!initial->context()->index_of(curvature))
    throw Error(fmt::format("curvature parameter '{}' is not a parameter of {}", curvature,
                            initial->name()));
  const FormalSum words = target_casimir.transported(initial);
  FormalSum parts[3] = {FormalSum(initial), FormalSum(initial), FormalSum(initial)};
  for (const auto& [w, c] : words.terms()) {
    const int lo = c.min_degree_in(curvature);
    const int hi = c.max_degree_in(curvature);
    if (lo < 0 || hi > 2)
      throw Error(fmt::format("Casimir has degree {} in {}; only 0..2 is supported",
                              lo < 0 ? lo : hi, curvature));
    for (int k = 0; k <= hi; ++k) {
      Poly part = coefficient_of_power(c, curvature, k);
      if (!part.is_zero()) parts[k].add(w, part);
    }
  }
  return {parts[0].normal_form(), parts[1].normal_form(), parts[2].normal_form(),
          std::string(curvature)};
}

Seed build_seed(const std::vector<CasimirDecomposition>& decomps,
                const std::vector<std::string>& alphas, const SeedOptions& options) {
  if (decomps.empty()) throw Error("build_seed needs at least one decomposition");
  if (decomps.size() != alphas.size())
    throw Error(fmt::format("build_seed: {} decompositions but {} alphas", decomps.size(),
                            alphas.size()));
  if (!options.quadratic_betas.empty() && options.quadratic_betas.size() != decomps.size())
    throw Error(fmt::format("build_seed: {} decompositions but {} betas", decomps.size(),
                            options.quadratic_betas.size()));
  const AlgebraPtr& alg = decomps.front().linear.algebra();
  const ContextPtr& ctx = alg->context();
  auto variable = [&](const std::string& name) {
    if (!ctx->index_of(name))
      throw Error(fmt::format("seed parameter '{}' is not a parameter of {}", name, alg->name()));
    return Poly::variable(ctx, name);
  };
  Seed seed{UEAElement(alg), alphas, true};
  for (std::size_t l = 0; l < decomps.size(); ++l) {
    if (!decomps[l].linear.is_zero()) seed.degenerate = false;
    seed.element += decomps[l].linear.scaled(variable(alphas[l]));
    if (!options.quadratic_betas.empty())
      seed.element += decomps[l].quadratic.scaled(variable(options.quadratic_betas[l]));
  }
  return seed;
}

std::vector<std::string> ExpandedGenerators::fixed_names() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < fixed.size(); ++k)
    if (fixed[k]) out.push_back(algebra->generators()[k]);
  return out;
}

ExpandedGenerators derive_generators(const AlgebraPtr& alg, const Seed& seed) {
  ExpandedGenerators out{alg, {}, {}};
  for (std::size_t k = 0; k < alg->dim(); ++k) {
    UEAElement x = UEAElement::generator(alg, k);
    UEAElement image = commutator(seed.element, x);
    const bool fixed = image.is_zero();
    out.images.push_back(fixed ? x : std::move(image));
    out.fixed.push_back(fixed);
  }
  return out;
}

void CentralTemplate::add_form_pair(const LieAlgebra& form, const ExpandedGenerators& gens,
                                    PairKey key) {
  const auto& names = gens.algebra->generators();
  std::vector<TemplateTerm> terms;
  const auto fi = form.index_of(names[key.first]);
  const auto fj = form.index_of(names[key.second]);
  if (fi && fj) {
    for (const auto& t : form.structure(*fi, *fj))
      terms.push_back({t.coeff, gens.algebra->require(form.generators()[t.gen])});
  }
  pairs[key] = std::move(terms);
}

UEAElement CentralTemplate::expand(const std::vector<TemplateTerm>& terms,
                                   const ExpandedGenerators& gens) const {
  const AlgebraPtr& alg = gens.algebra;
  const ContextPtr& ctx = alg->context();
  std::vector<std::pair<std::size_t, const UEAElement*>> slots;
  for (const auto& [sym, elem] : central_symbols) {
    const auto slot = ctx->index_of(sym);
    if (!slot) throw Error(fmt::format("central symbol '{}' is not a parameter", sym));
    slots.emplace_back(*slot, &elem);
  }
  UEAElement out(alg);
  for (const auto& term : terms) {
    const UEAElement operand = term.operand.index() == 0
                                   ? gens.images.at(std::get<0>(term.operand))
                                   : std::get<1>(term.operand);
    const Poly coeff = embed(term.coeff, ctx);
    for (const auto& [exps, c] : coeff.terms()) {
      Poly::Exponents rest = exps;
      rest.resize(ctx->size(), 0);
      UEAElement factor = UEAElement::unit(alg);
      for (const auto& [slot, elem] : slots) {
        if (rest[slot] > 0) factor = product(factor, power(*elem, rest[slot]));
        rest[slot] = 0;
      }
      out += product(factor, operand).scaled(Poly::monomial(ctx, rest, c));
    }
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactZero: return "exact_zero";
    case Verdict::TemplateMatch: return "template_match";
    case Verdict::Mismatch: return "mismatch";
  }
  return "?";
}

const char* to_string(Failure f) {
  switch (f) {
    case Failure::None: return "none";
    case Failure::ConstraintViolation: return "constraint-violation";
    case Failure::TemplateMismatch: return "template-mismatch";
    case Failure::ClosureFailure: return "closure-failure";
  }
  return "?";
}

bool ClosureReport::closed() const {
  if (failure != Failure::None) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

bool ClosureReport::as_expected() const {
  if (!expect_failure) return closed();
  for (const auto& c : checks)
    if (!c.ok) return false;
  return failure == Failure::TemplateMismatch || failure == Failure::ClosureFailure;
}

std::size_t ClosureReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.verdict == v;
  return n;
}

ClosureReport verify_closure(const ExpandedGenerators& gens, const AlgebraPtr& target,
                             const CentralTemplate& templates,
                             const std::vector<Constraint>& constraints, const Witness& witness) {
  const AlgebraPtr& alg = gens.algebra;
  const auto& names = alg->generators();
  ClosureReport report;
  report.initial = alg->name();
  report.target = target->name();
  report.fixed_set = gens.fixed_names();
  for (std::size_t k = 0; k < names.size(); ++k)
    report.generators.emplace_back(names[k], gens.images[k].str());
  for (const auto& c : constraints) report.constraints.push_back(c.lhs.str() + " = 0");
  for (const auto& [name, value] : witness.values) report.witness.emplace_back(name, value.str());
  for (const auto& r : witness.rules)
    report.witness.emplace_back(fmt::format("{}^{}", r.param, r.power), r.replacement.str());
  if (!witness.note.empty()) report.notes.push_back(witness.note);

  for (const auto& c : constraints) {
    const Poly value = witness.apply(c.lhs);
    if (!value.is_zero()) {
      report.failure = Failure::ConstraintViolation;
      report.first_failure = fmt::format("{}: {} = 0 evaluates to {}", c.label, c.lhs.str(),
                                         value.str());
      return report;
    }
  }

  bool template_failed = false;
  bool closure_failed = false;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      PairReport pr;
      pr.left = names[i];
      pr.right = names[j];
      const std::string label = fmt::format("[{}',{}']", names[i], names[j]);
      const auto it = templates.pairs.find({i, j});
      if (it == templates.pairs.end()) throw Error("no template for " + label);

      // Phase 1: symbolic equality.
      const UEAElement actual = commutator(gens.images[i], gens.images[j]);
      const UEAElement residual = actual - templates.expand(it->second, gens);
      pr.phase1_ok = residual.is_zero();
      pr.phase1_residual = residual.str();

      // Phase 2: scalarize the template.
      Vector scalar = target->zero_vector();
      std::string problem;
      for (const auto& term : it->second) {
        const Poly c = witness.apply(term.coeff);
        if (c.is_zero()) continue;
        if (term.operand.index() == 1) {
          const auto& raw = std::get<1>(term.operand);
          const UEAElement rest = reduce(substitute(raw, witness.values), witness.rules).scaled(c);
          if (!rest.is_zero() && problem.empty())
            problem = "non-linear remainder " + rest.str();
          continue;
        }
        const std::string& gen = names[std::get<0>(term.operand)];
        const auto t = target->index_of(gen);
        if (!t) {
          if (problem.empty()) problem = fmt::format("{} is not a generator of {}", gen, target->name());
          continue;
        }
        scalar[*t] += c;
      }
      if (pr.phase1_ok) {
        pr.scalarized = render(*target, scalar);
      } else {
        // The template is wrong, so show what the commutator itself becomes.
        const UEAElement value = reduce(substitute(actual, witness.values), witness.rules);
        pr.scalarized = value.str();
        if (const auto lin = as_linear(value)) {
          Vector v = target->zero_vector();
          bool mapped = true;
          for (std::size_t k = 0; k < lin->size(); ++k) {
            if ((*lin)[k].is_zero()) continue;
            const auto t = target->index_of(names[k]);
            if (t) v[*t] += (*lin)[k];
            else mapped = false;
          }
          if (mapped) pr.scalarized = render(*target, v);
        }
      }

      // Phase 3: compare with the target structure constants.
      Vector expected = target->zero_vector();
      const auto ti = target->index_of(names[i]);
      const auto tj = target->index_of(names[j]);
      if (ti && tj)
        for (const auto& t : target->structure(*ti, *tj)) expected[t.gen] += witness.apply(t.coeff);
      pr.target = render(*target, expected);
      if (problem.empty()) {
        for (std::size_t k = 0; k < scalar.size(); ++k)
          if (scalar[k] != expected[k]) {
            problem = fmt::format("scalarized {} but target gives {}", pr.scalarized, pr.target);
            break;
          }
      }

      if (!pr.phase1_ok) {
        pr.verdict = Verdict::Mismatch;
        pr.detail = "template does not hold; residual " + pr.phase1_residual;
        if (!template_failed && report.first_failure.empty()) report.first_failure = label + ": " + pr.detail;
        template_failed = true;
      } else if (!problem.empty()) {
        pr.verdict = Verdict::Mismatch;
        pr.detail = problem;
        if (report.first_failure.empty()) report.first_failure = label + ": " + problem;
        closure_failed = true;
      } else {
        pr.verdict = actual.is_zero() ? Verdict::ExactZero : Verdict::TemplateMatch;
      }
      report.pairs.push_back(std::move(pr));
    }
  }
  if (template_failed)
    report.failure = Failure::TemplateMismatch;
  else if (closure_failed)
    report.failure = Failure::ClosureFailure;
  return report;
}

// Drivers ------------------------------------------------------------------

namespace {

Witness make_witness(const ContextPtr& ctx,
                     std::initializer_list<std::pair<const char*, const char*>> values) {
  Witness w;
  for (const auto& [k, v] : values) w.values.emplace(k, parse_poly(v, ctx));
  return w;
}

ContextPtr theorem1_context() { return ParamContext::make({"a1", "a2", "c1", "c2", "omega"}); }
ContextPtr theorem2_context() { return ParamContext::make({"a1", "a2", "m", "xi", "kappa"}); }

struct Pipeline {
  AlgebraPtr initial;
  AlgebraPtr target;
  std::vector<CasimirDecomposition> decomps;
  Seed seed;
  ExpandedGenerators gens;
};

Pipeline run_pipeline(const AlgebraPtr& initial, const AlgebraPtr& target,
                      std::string_view curvature) {
  std::vector<CasimirDecomposition> decomps;
  for (const char* key : {"C1", "C2"})
    decomps.push_back(decompose_casimir(formal_named_element(target, key), initial, curvature));
  Seed seed = build_seed(decomps, {"a1", "a2"});
  ExpandedGenerators gens = derive_generators(initial, seed);
  return {initial, target, std::move(decomps), std::move(seed), std::move(gens)};
}

void add_decomposition_checks(ClosureReport& report, const Pipeline& p,
                              const std::vector<std::array<const char*, 3>>& expected) {
  static const char* keys[] = {"C1", "C2"};
  for (std::size_t l = 0; l < p.decomps.size(); ++l) {
    const auto& d = p.decomps[l];
    const std::string key = keys[l];
    report.checks.push_back(
        equality_check(key + " base", d.base, parse_element(expected[l][0], p.initial)));
    report.checks.push_back(
        equality_check(key + " linear", d.linear, parse_element(expected[l][1], p.initial)));
    report.checks.push_back(
        equality_check(key + " quadratic", d.quadratic, parse_element(expected[l][2], p.initial)));
    const FormalSum formal = formal_named_element(p.target, key);
    report.checks.push_back(equality_check(key + " recombination", d.recombined(),
                                           formal.transported(p.initial).normal_form()));
    // The same words ordered in the target give the target Casimir itself.
    report.checks.push_back(equality_check(key + " in target", formal.normal_form(),
                                           named_element(p.target, key)));
  }
}

void add_fixed_set_check(ClosureReport& report, const Pipeline& p,
                         const std::vector<std::string>& expected) {
  const auto actual = p.gens.fixed_names();
  NamedCheck c{"fixed set", actual == expected, {}};
  if (!c.ok) c.detail = fmt::format("got {{{}}}", fmt::join(actual, ", "));
  report.checks.push_back(std::move(c));
}

void add_image_check(ClosureReport& report, const Pipeline& p, const std::string& gen,
                     const std::string& closed_form) {
  report.checks.push_back(equality_check(gen + "' closed form",
                                         p.gens.images[p.initial->require(gen)],
                                         parse_element(closed_form, p.initial)));
}

// Brackets touching a fixed generator must keep the plain Galilei form.
void add_preservation_check(ClosureReport& report, const Pipeline& p) {
  NamedCheck c{"fixed-generator brackets unchanged", true, {}};
  for (const auto& pr : report.pairs) {
    const bool touches = p.gens.fixed[p.initial->require(pr.left)] ||
                         p.gens.fixed[p.initial->require(pr.right)];
    if (touches && !pr.phase1_ok) {
      c.ok = false;
      c.detail = fmt::format("[{}',{}'] changed", pr.left, pr.right);
      break;
    }
  }
  report.checks.push_back(std::move(c));
}

std::string cyclic(const char* pattern, std::size_t i) {
  const std::size_t j = i % 3 + 1;
  const std::size_t k = j % 3 + 1;
  return fmt::format(fmt::runtime(pattern), fmt::arg("i", i), fmt::arg("j", j), fmt::arg("k", k));
}

bool in_family(const std::string& gen, std::initializer_list<char> letters) {
  for (char c : letters)
    if (!gen.empty() && gen[0] == c && gen.size() == 2) return true;
  return false;
}

ClosureReport relativistic(const char* driver, const char* target_name, const Witness& witness) {
  const auto start = std::chrono::steady_clock::now();
  const ContextPtr ctx = theorem1_context();
  const Pipeline p = run_pipeline(over("galilei", ctx), over(target_name, ctx), "omega");
  const auto& alg = p.initial;
  const auto& names = alg->generators();

  CentralTemplate tmpl;
  tmpl.central_symbols = {{"c1", named_element(alg, "C1")}, {"c2", named_element(alg, "C2")}};
  auto is_p = [&](std::size_t i) { return in_family(names[i], {'P', 'K'}); };
  tmpl.add_form(*catalog("galilei"), p.gens,
                [&](std::size_t i, std::size_t j) { return !(is_p(i) && is_p(j)); });
  const Poly a1 = Poly::variable(ctx, "a1"), a2 = Poly::variable(ctx, "a2");
  const Poly c1 = Poly::variable(ctx, "c1"), c2 = Poly::variable(ctx, "c2");
  const Poly pk = Poly(-4) * a2 * a2 * c1 * c2;
  const Poly hw = Poly(-8) * a2 * (a1 * c1 + a2 * c2);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      const std::size_t pi = alg->require(fmt::format("P{}", i));
      const std::size_t pj = alg->require(fmt::format("P{}", j));
      const std::size_t ki = alg->require(fmt::format("K{}", i));
      const std::size_t kj = alg->require(fmt::format("K{}", j));
      if (i < j) tmpl.pairs[{pi, pj}] = {};
      if (i == j) {
        tmpl.pairs[{pi, kj}] = {{pk, alg->require("H")}};
      } else {
        tmpl.pairs[{pi, kj}] = {};
      }
      if (i < j) {
        const std::size_t k = 6 - i - j;
        const int e = levi_civita(i, j, k);
        const UEAElement h_w = parse_element(fmt::format("H*<W{}>", k), alg);
        tmpl.pairs[{ki, kj}] = {{pk.scaled(e), alg->require(fmt::format("J{}", k))},
                                {hw.scaled(e), h_w}};
      }
    }
  }

  const std::vector<Constraint> constraints = {
      {"central combination", a1 * c1 + a2 * c2},
      {"curvature", Poly(4) * a2 * a2 * c1 * c2 + Poly::variable(ctx, "omega")}};
  ClosureReport report = verify_closure(p.gens, p.target, tmpl, constraints, witness);
  report.driver = driver;
  report.seed = p.seed.element.str();

  add_decomposition_checks(report, p,
                           {{"<PP>", "H^2", "0"},
                            {"<W1>^2 + <W2>^2 + <W3>^2", "2*H*<JW> + <JP>^2", "H^2*<JJ>"}});
  report.checks.push_back(equality_check(
      "seed closed form", p.seed.element,
      parse_element("a1*H^2 + 2*a2*H*<JW> + a2*<JP>^2", alg)));
  add_fixed_set_check(report, p, {"H", "J1", "J2", "J3"});
  for (std::size_t i = 1; i <= 3; ++i) {
    add_image_check(report, p, fmt::format("P{}", i),
                    cyclic("2*a2*H*(P{j}*<W{k}> - P{k}*<W{j}>)", i));
    add_image_check(report, p, fmt::format("K{}", i),
                    cyclic("-2*a1*H*P{i} - 2*a2*<JW>*P{i} + 2*a2*H*(K{j}*<W{k}> - K{k}*<W{j}>)"
                           " + 3*a2*(P{j}*<W{k}> - P{k}*<W{j}>) + 2*a2*<JP>*<W{i}>",
                           i));
  }
  add_preservation_check(report, p);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

Witness theorem1_witness(int alpha2_sign) {
  if (alpha2_sign != 1 && alpha2_sign != -1) throw Error("alpha2 sign must be +1 or -1");
  const ContextPtr ctx = theorem1_context();
  Witness w = alpha2_sign > 0
                  ? make_witness(ctx, {{"c1", "1"}, {"c2", "1/4"}, {"a2", "1"}, {"a1", "-1/4"},
                                       {"omega", "-1"}})
                  : make_witness(ctx, {{"c1", "1"}, {"c2", "1/4"}, {"a2", "-1"}, {"a1", "1/4"},
                                       {"omega", "-1"}});
  w.note = alpha2_sign > 0 ? "a2 takes the positive root of its square"
                           : "a2 takes the negative root of its square";
  return w;
}

Witness euclid_witness() {
  Witness w = make_witness(theorem1_context(), {{"c1", "1"}, {"c2", "-1/4"}, {"a2", "1"},
                                                {"a1", "1/4"}, {"omega", "1"}});
  w.note = "a2 takes the positive root of its square";
  return w;
}

Witness theorem2_witness() {
  return make_witness(theorem2_context(),
                      {{"m", "1"}, {"xi", "1/2"}, {"kappa", "-1"}, {"a1", "1"}});
}

ClosureReport run_theorem1(const std::optional<Witness>& witness) {
  return relativistic("poincare", "poincare", witness.value_or(theorem1_witness()));
}

ClosureReport run_euclid(const std::optional<Witness>& witness) {
  return relativistic("euclid4", "euclid4", witness.value_or(euclid_witness()));
}

namespace {

ClosureReport newton_hooke(const char* driver, const Witness& witness) {
  const auto start = std::chrono::steady_clock::now();
  const ContextPtr ctx = theorem2_context();
  const Pipeline p = run_pipeline(over("galilei_ext", ctx), over("newton_hooke", ctx), "kappa");
  const auto& alg = p.initial;
  const auto& names = alg->generators();

  CentralTemplate tmpl;
  tmpl.central_symbols = {{"xi", UEAElement::generator(alg, "Xi")}};
  auto is_p = [&](std::size_t i) { return names[i] == "H" || in_family(names[i], {'P'}); };
  tmpl.add_form(*catalog("galilei"), p.gens,
                [&](std::size_t i, std::size_t j) { return !(is_p(i) && is_p(j)); });
  const Poly a1 = Poly::variable(ctx, "a1"), m = Poly::variable(ctx, "m");
  const Poly xi = Poly::variable(ctx, "xi");
  const Poly hp = Poly(-4) * a1 * a1 * m * m * xi * xi;
  const std::size_t h = alg->require("H");
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::size_t pi = alg->require(fmt::format("P{}", i));
    tmpl.pairs[{h, pi}] = {{hp, alg->require(fmt::format("K{}", i))}};
    for (std::size_t j = i + 1; j <= 3; ++j) tmpl.pairs[{pi, alg->require(fmt::format("P{}", j))}] = {};
  }

  const std::vector<Constraint> constraints = {
      {"curvature", Poly(4) * a1 * a1 * m * m * xi * xi + Poly::variable(ctx, "kappa")}};
  ClosureReport report = verify_closure(p.gens, p.target, tmpl, constraints, witness);
  report.driver = driver;
  report.seed = p.seed.element.str();

  add_decomposition_checks(report, p,
                           {{"<PP>", "<KK>", "0"}, {"<W1>^2 + <W2>^2 + <W3>^2", "0", "0"}});
  report.checks.push_back(equality_check("seed closed form", p.seed.element,
                                         parse_element("a1*<KK>", alg)));
  add_fixed_set_check(report, p, {"Xi", "K1", "K2", "K3", "J1", "J2", "J3"});
  add_image_check(report, p, "H", "2*a1*<KP> + 3*a1*m*Xi");
  for (std::size_t i = 1; i <= 3; ++i)
    add_image_check(report, p, fmt::format("P{}", i), fmt::format("-2*a1*m*Xi*K{}", i));
  add_preservation_check(report, p);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

ClosureReport run_theorem2(const std::optional<Witness>& witness) {
  return newton_hooke("newton_hooke", witness.value_or(theorem2_witness()));
}

ClosureReport run_theorem2_formal() {
  const ContextPtr ctx = theorem2_context();
  Witness w = make_witness(ctx, {{"m", "1"}, {"xi", "1/2"}, {"kappa", "1"}});
  w.rules.push_back({"a1", 2, Poly(-1)});
  w.note = "a1 has no rational value for kappa = 1; it stays formal with a1^2 = -1";
  return newton_hooke("newton_hooke_formal", w);
}

ClosureReport run_negative_nh() {
  const auto start = std::chrono::steady_clock::now();
  const ContextPtr ctx = ParamContext::make({"a1", "a2", "kappa"});
  const Pipeline p = run_pipeline(over("galilei", ctx), over("newton_hooke", ctx), "kappa");

  CentralTemplate tmpl;
  tmpl.add_form(*p.target, p.gens, [](std::size_t, std::size_t) { return true; });
  Witness w = make_witness(ctx, {{"a1", "1"}, {"kappa", "-1"}});
  ClosureReport report = verify_closure(p.gens, p.target, tmpl, {}, w);
  report.driver = "negative-nh";
  report.expect_failure = true;
  report.seed = p.seed.element.str();

  report.checks.push_back(equality_check("seed closed form", p.seed.element,
                                         parse_element("a1*<KK>", p.initial)));
  add_fixed_set_check(report, p, {"P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"});
  add_image_check(report, p, "H", "2*a1*<KP>");
  NamedCheck sub{"fixed subalgebra (K, J) closes", true, {}};
  for (const auto& pr : report.pairs) {
    const bool kj = in_family(pr.left, {'K', 'J'}) && in_family(pr.right, {'K', 'J'});
    if (kj && pr.verdict == Verdict::Mismatch) {
      sub.ok = false;
      sub.detail = fmt::format("[{}',{}'] {}", pr.left, pr.right, pr.detail);
      break;
    }
  }
  report.checks.push_back(std::move(sub));
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace liexp

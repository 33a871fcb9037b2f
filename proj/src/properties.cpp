#include "liexp/properties.hpp"

#include <fmt/format.h>

#include <functional>

#include "liexp/catalog.hpp"

namespace liexp {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational() {
  Rational r(integer(-9, 9), integer(1, 5));
  r.canonicalize();
  return r;
}

Poly Sampler::poly(const ContextPtr& ctx, int max_terms, int max_degree) {
  Poly p = Poly::constant(ctx, 0);
  const int terms = integer(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e(ctx->size(), 0);
    int budget = integer(0, max_degree);
    while (budget-- > 0 && ctx->size() > 0) ++e[integer(0, static_cast<int>(ctx->size()) - 1)];
    p += Poly::monomial(ctx, e, rational());
  }
  return p;
}

Letters Sampler::word(const LieAlgebra& alg, int max_len, int min_len) {
  Letters w(integer(min_len, max_len));
  for (auto& l : w) l = static_cast<std::uint16_t>(integer(0, static_cast<int>(alg.dim()) - 1));
  return w;
}

UEAElement Sampler::element(const AlgebraPtr& alg, int max_degree, int max_terms) {
  UEAElement x(alg);
  const ContextPtr& ctx = alg->context();
  const int terms = integer(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m(alg->dim(), 0);
    const int degree = integer(0, max_degree);
    for (int d = 0; d < degree; ++d) ++m[integer(0, static_cast<int>(alg->dim()) - 1)];
    Poly c = Poly::constant(ctx, integer(-3, 3));
    if (ctx && ctx->size() > 0 && integer(0, 2) == 0)
      c *= Poly::variable(ctx, ctx->names()[integer(0, static_cast<int>(ctx->size()) - 1)]);
    x.add_term(m, c);
  }
  return x;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.samples;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = describe();
  }

  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

std::string show(const Letters& w, const LieAlgebra& alg) {
  std::string s;
  for (auto l : w) s += (s.empty() ? "" : "*") + alg.generators()[l];
  return s.empty() ? "1" : s;
}

std::vector<Word> monomial_words(const UEAElement& x) {
  std::vector<Word> out;
  for (const auto& [m, c] : x.terms()) {
    Letters w;
    for (std::size_t g = 0; g < m.size(); ++g)
      for (int e = 0; e < m[g]; ++e) w.push_back(static_cast<std::uint16_t>(g));
    out.push_back({w, c});
  }
  return out;
}

}  // namespace

std::vector<PropertyResult> ring_properties(std::uint64_t seed, std::size_t samples) {
  Sampler s(seed);
  const ContextPtr ctx = ParamContext::make({"x", "y", "z"});
  Tally ring("ring axioms (coeffring)");
  Tally hom("substitution is a homomorphism");
  Tally lowest("coefficients in lowest terms");
  auto reduced = [](const Poly& x) {
    for (const auto& [e, c] : x.terms()) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
      if (g != 1 || c.get_den() <= 0) return false;
    }
    return true;
  };
  for (std::size_t n = 0; n < samples; ++n) {
    const Poly p = s.poly(ctx), q = s.poly(ctx), r = s.poly(ctx);
    const bool ok = p + q == q + p && p * q == q * p && (p + q) + r == p + (q + r) &&
                    (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r &&
                    p + Poly(0) == p && p * Poly(1) == p && (p - p).is_zero() &&
                    (p * Poly(0)).is_zero();
    ring.check(ok, [&] { return fmt::format("p={}, q={}, r={}", p.str(), q.str(), r.str()); });
    const Poly sum = p + q.scaled(s.rational()), prod = p * r.scaled(s.rational());
    lowest.check(reduced(sum) && reduced(prod),
                 [&] { return fmt::format("{} / {}", sum.str(), prod.str()); });

    Assignment a;
    a.emplace("x", Poly::constant(ctx, s.rational()));
    a.emplace("y", s.poly(ctx, 2, 1));
    const bool h = substitute(p * q, a) == substitute(p, a) * substitute(q, a) &&
                   substitute(p + q, a) == substitute(p, a) + substitute(q, a);
    hom.check(h, [&] { return fmt::format("p={}, q={}", p.str(), q.str()); });
  }
  return {ring.result(), hom.result(), lowest.result()};
}

std::vector<PropertyResult> pbw_properties(const AlgebraPtr& alg, std::uint64_t seed,
                                           std::size_t samples) {
  Sampler s(seed);
  const std::string tag = " (" + alg->name() + ")";
  Tally idem("normal form idempotent" + tag);
  Tally swap("transposition invariance" + tag);
  Tally concat("normal form of concatenation is the product" + tag);
  for (std::size_t n = 0; n < samples; ++n) {
    const Letters w = s.word(*alg, 6, 2);
    const UEAElement x = normal_form(alg, {{w, Poly(1)}});
    idem.check(normal_form(alg, monomial_words(x)) == x, [&] { return show(w, *alg); });

    // u x y v = u y x v + u [x,y] v
    const auto pos = static_cast<std::size_t>(s.integer(0, static_cast<int>(w.size()) - 2));
    Letters swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    std::vector<Word> rhs{{swapped, Poly(1)}};
    for (const auto& t : alg->structure(w[pos], w[pos + 1])) {
      Letters v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      v.push_back(static_cast<std::uint16_t>(t.gen));
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
      rhs.push_back({v, t.coeff});
    }
    swap.check(normal_form(alg, rhs) == x,
               [&] { return fmt::format("{} at {}", show(w, *alg), pos); });

    const Letters u = s.word(*alg, 3);
    Letters uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    concat.check(normal_form(alg, {{uw, Poly(1)}}) ==
                     product(normal_form(alg, {{u, Poly(1)}}), x),
                 [&] { return show(u, *alg) + " | " + show(w, *alg); });
  }
  return {idem.result(), swap.result(), concat.result()};
}

PropertyResult associativity_property(const AlgebraPtr& alg, std::uint64_t seed,
                                      std::size_t samples) {
  Sampler s(seed);
  Tally t("product associativity (" + alg->name() + ")");
  for (std::size_t n = 0; n < samples; ++n) {
    const UEAElement a = s.element(alg), b = s.element(alg), c = s.element(alg);
    t.check(product(product(a, b), c) == product(a, product(b, c)),
            [&] { return fmt::format("a={}, b={}, c={}", a.str(), b.str(), c.str()); });
  }
  return t.result();
}

PropertyResult uea_jacobi_property(const AlgebraPtr& alg, std::uint64_t seed,
                                   std::size_t samples) {
  Sampler s(seed);
  Tally t("UEA Jacobi identity (" + alg->name() + ")");
  for (std::size_t n = 0; n < samples; ++n) {
    const UEAElement a = s.element(alg, 2), b = s.element(alg, 2), c = s.element(alg, 2);
    const UEAElement sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                           commutator(c, commutator(a, b));
    t.check(sum.is_zero(),
            [&] { return fmt::format("a={}, b={}, c={}", a.str(), b.str(), c.str()); });
  }
  return t.result();
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, const PropertyOptions& options) {
  std::vector<PropertyResult> out = ring_properties(seed, options.ring_samples);
  std::uint64_t k = 1;
  for (const auto& name : catalog_names()) {
    const AlgebraPtr alg = catalog(name);
    for (auto& r : pbw_properties(alg, seed + k++, options.pbw_samples)) out.push_back(r);
    out.push_back(associativity_property(alg, seed + k++, options.assoc_samples));
    out.push_back(uea_jacobi_property(alg, seed + k++, options.jacobi_samples));
  }
  return out;
}

}  // namespace liexp

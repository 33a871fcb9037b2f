#include "liexp/poly.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lexer.hpp"

namespace liexp {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() &&
           std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error("not a rational literal: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num);
  mpz_class d(den);
  if (d == 0) throw Error("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// ParamContext

std::shared_ptr<const ParamContext> ParamContext::make(std::vector<std::string> names,
                                                       std::optional<std::string> contraction) {
  auto ctx = std::shared_ptr<ParamContext>(new ParamContext());
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error("duplicate parameter '" + names[i] + "'");
  }
  ctx->names_ = std::move(names);
  if (contraction) {
    auto slot = ctx->index_of(*contraction);
    if (!slot) throw Error("contraction parameter '" + *contraction + "' not in context");
    ctx->contraction_ = slot;
  }
  return ctx;
}

std::optional<std::size_t> ParamContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::shared_ptr<const ParamContext> ParamContext::with(
    const std::vector<std::string>& extra, std::optional<std::string> contraction) const {
  std::vector<std::string> names = names_;
  for (const auto& n : extra)
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  if (!contraction && contraction_) contraction = names_[*contraction_];
  return make(std::move(names), std::move(contraction));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// Poly

bool Poly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(const Rational& value) {
  if (value != 0) terms_.emplace(Exponents{}, value);
}

Poly Poly::constant(ContextPtr ctx, const Rational& value) {
  Poly p;
  const std::size_t n = ctx ? ctx->size() : 0;
  p.ctx_ = std::move(ctx);
  if (value != 0) p.terms_.emplace(Exponents(n, 0), value);
  return p;
}

Poly Poly::variable(ContextPtr ctx, std::string_view name, int power) {
  if (!ctx) throw Error("variable '" + std::string(name) + "' needs a parameter context");
  auto slot = ctx->index_of(name);
  if (!slot) throw Error("unknown parameter '" + std::string(name) + "'");
  Exponents e(ctx->size(), 0);
  e[*slot] = power;
  return monomial(std::move(ctx), std::move(e), 1);
}

Poly Poly::monomial(ContextPtr ctx, Exponents exponents, const Rational& coeff) {
  const std::size_t n = ctx ? ctx->size() : 0;
  if (exponents.size() != n) throw Error("exponent vector does not match context");
  for (std::size_t i = 0; i < n; ++i) {
    if (exponents[i] < 0 && ctx->contraction_slot() != i)
      throw Error("negative exponent on non-contraction parameter '" + ctx->names()[i] + "'");
  }
  Poly p;
  p.ctx_ = std::move(ctx);
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rational> Poly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::max_degree_in(std::string_view name) const {
  if (!ctx_ || terms_.empty()) return 0;
  auto slot = ctx_->index_of(name);
  if (!slot) return 0;
  int best = terms_.begin()->first[*slot];
  for (const auto& [e, c] : terms_) best = std::max(best, e[*slot]);
  return best;
}

int Poly::min_degree_in(std::string_view name) const {
  if (!ctx_ || terms_.empty()) return 0;
  auto slot = ctx_->index_of(name);
  if (!slot) return 0;
  int best = terms_.begin()->first[*slot];
  for (const auto& [e, c] : terms_) best = std::min(best, e[*slot]);
  return best;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
bool bare(const ContextPtr& c) { return !c || c->size() == 0; }
}  // namespace

ContextPtr Poly::resolve(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return a;
  if (bare(a)) return b;
  if (bare(b)) return a;
  if (*a == *b) return a;
  throw ContextMismatch("parameter contexts differ");
}

Poly Poly::lifted(const ContextPtr& ctx) const {
  if (ctx_ == ctx || !ctx) return *this;
  if (!bare(ctx_)) return *this;  // same names, checked by resolve()
  Poly p;
  p.ctx_ = ctx;
  for (const auto& [e, c] : terms_) p.terms_.emplace(Exponents(ctx->size(), 0), c);
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
  auto ctx = resolve(ctx_, rhs.ctx_);
  if (ctx_ != ctx) *this = lifted(ctx);
  if (rhs.ctx_ != ctx) {
    const Poly r = rhs.lifted(ctx);
    for (const auto& [e, c] : r.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  auto ctx = Poly::resolve(lhs.ctx_, rhs.ctx_);
  const Poly a = lhs.lifted(ctx);
  const Poly b = rhs.lifted(ctx);
  Poly out;
  out.ctx_ = ctx;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  Poly::Exponents e;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Rational& factor) const {
  if (factor == 0) {
    Poly z;
    z.ctx_ = ctx_;
    return z;
  }
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c *= factor;
  return p;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(ctx_, 1);
  Poly base = *this;
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

namespace {

using NamedTerm = std::pair<std::vector<std::pair<std::string, int>>, Rational>;

std::vector<NamedTerm> named_terms(const Poly& p) {
  std::vector<NamedTerm> out;
  for (const auto& [e, c] : p.terms()) {
    NamedTerm t;
    t.second = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t.first.emplace_back(p.context()->names()[i], e[i]);
    std::sort(t.first.begin(), t.first.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const NamedTerm& a, const NamedTerm& b) {
    return a.first < b.first;
  });
  return out;
}

}  // namespace

bool Poly::operator==(const Poly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  if (same_context(ctx_, rhs.ctx_)) return terms_ == rhs.terms_;
  if (bare(ctx_) || bare(rhs.ctx_)) {
    const Poly& withctx = bare(ctx_) ? rhs : *this;
    const Poly& without = bare(ctx_) ? *this : rhs;
    return withctx.terms_ == without.lifted(withctx.ctx_).terms_;
  }
  return named_terms(*this) == named_terms(rhs);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += ctx_->names()[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    std::string term;
    if (factors.empty()) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = factors;
    } else {
      term = mag.get_str() + "*" + factors;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string Poly::str_factor() const {
  return terms_.size() > 1 ? "(" + str() + ")" : str();
}

// ---------------------------------------------------------------------------
// Free functions

Poly embed(const Poly& p, ContextPtr ctx) {
  if (same_context(p.ctx_, ctx)) {
    Poly q = p;
    q.ctx_ = std::move(ctx);
    return q;
  }
  if (bare(p.ctx_)) return p.lifted(ctx);
  std::vector<std::size_t> slot(p.ctx_->size());
  for (std::size_t i = 0; i < slot.size(); ++i) {
    const auto& name = p.ctx_->names()[i];
    bool used = std::any_of(p.terms_.begin(), p.terms_.end(),
                            [i](const auto& t) { return t.first[i] != 0; });
    auto target = ctx ? ctx->index_of(name) : std::nullopt;
    if (!target) {
      if (used) throw ContextMismatch("parameter '" + name + "' missing from target context");
      slot[i] = static_cast<std::size_t>(-1);
    } else {
      slot[i] = *target;
    }
  }
  Poly out;
  out.ctx_ = ctx;
  const std::size_t n = ctx ? ctx->size() : 0;
  for (const auto& [e, c] : p.terms_) {
    Poly::Exponents f(n, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) f[slot[i]] = e[i];
    out += Poly::monomial(ctx, std::move(f), c);
  }
  return out;
}

Poly substitute(const Poly& p, const Assignment& assignment) {
  if (!p.ctx_ || assignment.empty()) return p;
  const auto& names = p.ctx_->names();
  std::vector<const Poly*> value(names.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto it = assignment.find(names[i]);
    if (it != assignment.end()) {
      value[i] = &it->second;
      any = true;
    }
  }
  if (!any) return p;
  Poly out = Poly::constant(p.ctx_, 0);
  for (const auto& [e, c] : p.terms_) {
    Poly::Exponents kept = e;
    Poly factor = Poly::constant(p.ctx_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!value[i] || e[i] == 0) continue;
      kept[i] = 0;
      const Poly v = embed(*value[i], p.ctx_);
      if (e[i] > 0) {
        factor *= v.pow(static_cast<unsigned>(e[i]));
      } else {
        auto cv = v.constant_value();
        if (!cv || *cv == 0)
          throw Error("cannot substitute a non-invertible value for '" + names[i] +
                      "' with negative power");
        Rational inv = 1 / *cv;
        factor *= Poly::constant(p.ctx_, inv).pow(static_cast<unsigned>(-e[i]));
      }
    }
    out += factor * Poly::monomial(p.ctx_, std::move(kept), 1);
  }
  return out;
}

Poly limit_eps_zero(const Poly& p) {
  if (!p.context() || !p.context()->contraction_slot()) return p;
  const std::size_t slot = *p.context()->contraction_slot();
  int most_negative = 0;
  for (const auto& [e, c] : p.terms()) most_negative = std::min(most_negative, e[slot]);
  if (most_negative < 0) throw DivergenceError(most_negative);
  Poly out = Poly::constant(p.context(), 0);
  for (const auto& [e, c] : p.terms())
    if (e[slot] == 0) out += Poly::monomial(p.context(), e, c);
  return out;
}

Poly coefficient_of_power(const Poly& p, std::string_view name, int power) {
  if (!p.context()) return power == 0 ? p : Poly();
  auto slot = p.context()->index_of(name);
  if (!slot) return power == 0 ? p : Poly::constant(p.context(), 0);
  Poly out = Poly::constant(p.context(), 0);
  for (const auto& [e, c] : p.terms()) {
    if (e[*slot] != power) continue;
    Poly::Exponents f = e;
    f[*slot] = 0;
    out += Poly::monomial(p.context(), std::move(f), c);
  }
  return out;
}

Poly reduce(const Poly& p, std::span<const PowerRule> rules) {
  if (rules.empty() || !p.context()) return p;
  Poly current = p;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : rules) {
      auto slot = current.context()->index_of(rule.param);
      if (!slot || rule.power <= 0) continue;
      Poly next = Poly::constant(current.context(), 0);
      bool hit = false;
      for (const auto& [e, c] : current.terms()) {
        if (e[*slot] >= rule.power) {
          Poly::Exponents f = e;
          f[*slot] -= rule.power;
          next += Poly::monomial(current.context(), std::move(f), c) *
                  embed(rule.replacement, current.context());
          hit = true;
        } else {
          next += Poly::monomial(current.context(), e, c);
        }
      }
      if (hit) {
        current = std::move(next);
        changed = true;
      }
    }
  }
  return current;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, ContextPtr ctx) : lex_(text), ctx_(std::move(ctx)) {}

  Poly parse() {
    Poly p = expr();
    if (lex_.peek().kind != detail::Tok::End) lex_.fail_here("unexpected token");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    while (true) {
      if (lex_.accept('+')) {
        acc += term();
      } else if (lex_.accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (lex_.accept('*')) {
        acc *= unary();
      } else if (lex_.at_symbol('/')) {
        const auto at = lex_.take().offset;
        acc *= inverse(unary(), at);
      } else {
        return acc;
      }
    }
  }

  Poly inverse(const Poly& d, std::size_t at) {
    if (d.size() != 1) lex_.fail("division by a non-monomial", at);
    const auto& [e, c] = *d.terms().begin();
    Poly::Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    try {
      return Poly::monomial(d.context(), std::move(neg), 1 / c);
    } catch (const Error& err) {
      lex_.fail(err.what(), at);
    }
  }

  Poly unary() {
    if (lex_.accept('-')) return -unary();
    if (lex_.accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!lex_.at_symbol('^')) return base;
    const auto at = lex_.take().offset;
    bool negative = lex_.accept('-');
    bool paren = false;
    if (!negative && lex_.accept('(')) {
      paren = true;
      negative = lex_.accept('-');
    }
    if (lex_.peek().kind != detail::Tok::Number) lex_.fail_here("expected integer exponent");
    const unsigned n = static_cast<unsigned>(std::stoul(lex_.take().text));
    if (paren) lex_.expect(')');
    Poly r = base.pow(n);
    return negative ? inverse(r, at) : r;
  }

  Poly atom() {
    const auto& t = lex_.peek();
    if (t.kind == detail::Tok::Number) {
      return Poly::constant(ctx_, Rational(mpz_class(lex_.take().text)));
    }
    if (t.kind == detail::Tok::Ident) {
      if (!ctx_ || !ctx_->index_of(t.text)) lex_.fail("unknown parameter '" + t.text + "'", t.offset);
      return Poly::variable(ctx_, lex_.take().text);
    }
    if (lex_.accept('(')) {
      Poly p = expr();
      lex_.expect(')');
      return p;
    }
    lex_.fail_here("expected number, parameter or '('");
  }

  detail::Lexer lex_;
  ContextPtr ctx_;
};

}  // namespace

Poly parse_poly(std::string_view text, const ContextPtr& ctx) {
  return embed(PolyParser(text, ctx).parse(), ctx);
}

}  // namespace liexp

#include "liexp/lie_algebra.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace liexp {

namespace {

// Accumulate c * x_gen into a sparse list, dropping cancellations.
void accumulate(BracketTerms& terms, std::size_t gen, const Poly& c) {
  if (c.is_zero()) return;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->gen == gen) {
      it->coeff += c;
      if (it->coeff.is_zero()) terms.erase(it);
      return;
    }
  }
  terms.push_back({gen, c});
}

void sort_terms(BracketTerms& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const BracketTerm& a, const BracketTerm& b) { return a.gen < b.gen; });
}

}  // namespace

std::optional<std::size_t> LieAlgebra::index_of(std::string_view gen) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == gen) return i;
  return std::nullopt;
}

std::size_t LieAlgebra::require(std::string_view gen) const {
  auto i = index_of(gen);
  if (!i) throw Error("unknown generator '" + std::string(gen) + "' in algebra " + name_);
  return *i;
}

Vector LieAlgebra::zero_vector() const { return Vector(dim(), Poly::constant(ctx_, 0)); }

Vector LieAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero_vector();
  v.at(i) = Poly::constant(ctx_, 1);
  return v;
}

void LieAlgebra::build_table() {
  const std::size_t n = generators_.size();
  table_.assign(n * n, {});
  for (const auto& [key, terms] : brackets_) {
    const auto [i, j] = key;
    table_[i * n + j] = terms;
    BracketTerms neg = terms;
    for (auto& t : neg) t.coeff = -t.coeff;
    table_[j * n + i] = std::move(neg);
  }
}

LieAlgebra LieAlgebra::with_context(ContextPtr ctx) const {
  LieAlgebra out = *this;
  out.ctx_ = ctx;
  for (auto& [key, terms] : out.brackets_)
    for (auto& t : terms) t.coeff = embed(t.coeff, ctx);
  out.build_table();
  return out;
}

LieAlgebra LieAlgebra::with_name(std::string name) const {
  LieAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

LieAlgebra LieAlgebra::with_metadata(std::string key, std::string value) const {
  LieAlgebra out = *this;
  out.metadata_[std::move(key)] = std::move(value);
  return out;
}

LieAlgebra::Builder::Builder(std::string name, std::vector<std::string> generators,
                             ContextPtr ctx) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].empty()) throw Error("empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[i] == generators[j])
        throw Error("duplicate generator '" + generators[i] + "'");
  }
  alg_.name_ = std::move(name);
  alg_.generators_ = std::move(generators);
  alg_.ctx_ = std::move(ctx);
}

LieAlgebra::Builder& LieAlgebra::Builder::add(std::size_t left, std::size_t right,
                                              const BracketTerms& terms) {
  const std::size_t n = alg_.generators_.size();
  if (left >= n || right >= n) throw Error("generator index out of range");
  for (const auto& t : terms)
    if (t.gen >= n) throw Error("generator index out of range");
  if (left == right) {
    BracketTerms sum;
    for (const auto& t : terms) accumulate(sum, t.gen, embed(t.coeff, alg_.ctx_));
    if (!sum.empty())
      throw Error("[" + alg_.generators_[left] + "," + alg_.generators_[left] +
                  "] must vanish");
    return *this;
  }
  const bool flip = left > right;
  auto key = flip ? std::make_pair(right, left) : std::make_pair(left, right);
  auto& slot = alg_.brackets_[key];
  for (const auto& t : terms) {
    Poly c = embed(t.coeff, alg_.ctx_);
    accumulate(slot, t.gen, flip ? -c : c);
  }
  sort_terms(slot);
  if (slot.empty()) alg_.brackets_.erase(key);
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::add(
    std::string_view left, std::string_view right,
    const std::vector<std::pair<std::string, Poly>>& terms) {
  BracketTerms t;
  for (const auto& [g, c] : terms) t.push_back({alg_.require(g), c});
  return add(alg_.require(left), alg_.require(right), t);
}

LieAlgebra::Builder& LieAlgebra::Builder::metadata(std::string key, std::string value) {
  alg_.metadata_[std::move(key)] = std::move(value);
  return *this;
}

LieAlgebra LieAlgebra::Builder::build() const {
  LieAlgebra out = alg_;
  out.build_table();
  return out;
}

// ---------------------------------------------------------------------------

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw Error("vector dimension does not match algebra");
  Vector out = alg.zero_vector();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = alg.structure(i, j);
      if (terms.empty()) continue;
      const Poly xy = x[i] * y[j];
      for (const auto& t : terms) out[t.gen] += xy * t.coeff;
    }
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

std::string format_vector(const LieAlgebra& alg, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    std::string term;
    bool negative = false;
    if (c == "1") {
      term = alg.generators()[i];
    } else if (c == "-1") {
      term = alg.generators()[i];
      negative = true;
    } else if (v[i].size() == 1 && c[0] == '-') {
      term = c.substr(1) + "*" + alg.generators()[i];
      negative = true;
    } else {
      term = v[i].str_factor() + "*" + alg.generators()[i];
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg) {
  std::vector<JacobiViolation> out;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector xi = alg.basis_vector(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector xj = alg.basis_vector(j);
      const Vector xij = bracket(alg, xi, xj);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector xk = alg.basis_vector(k);
        Vector sum = bracket(alg, xij, xk);
        const Vector a = bracket(alg, bracket(alg, xj, xk), xi);
        const Vector b = bracket(alg, bracket(alg, xk, xi), xj);
        for (std::size_t m = 0; m < n; ++m) sum[m] += a[m] + b[m];
        if (!is_zero(sum)) out.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return out;
}

LinearMap LinearMap::identity(const LieAlgebra& alg) {
  LinearMap f;
  for (std::size_t j = 0; j < alg.dim(); ++j) f.columns.push_back(alg.basis_vector(j));
  return f;
}

LinearMap LinearMap::diagonal(const LieAlgebra& alg, const std::vector<int>& signs) {
  if (signs.size() != alg.dim()) throw Error("diagonal map size does not match algebra");
  LinearMap f;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Vector col = alg.zero_vector();
    col[j] = Poly::constant(alg.context(), signs[j]);
    f.columns.push_back(std::move(col));
  }
  return f;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.size() != columns.size()) throw Error("linear map size does not match vector");
  Vector out(columns.empty() ? 0 : columns.front().size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += columns[j][i] * v[j];
  }
  return out;
}

CheckResult automorphism_check(const LieAlgebra& alg, const LinearMap& f) {
  const std::size_t n = alg.dim();
  if (f.columns.size() != n) return {false, "map is not square over the basis"};
  for (const auto& col : f.columns)
    if (col.size() != n) return {false, "map is not square over the basis"};

  for (std::size_t i = 0; i < n; ++i) {
    const Vector ff = f.apply(f.columns[i]);
    Vector diff = ff;
    diff[i] -= Poly::constant(alg.context(), 1);
    if (!is_zero(diff))
      return {false, fmt::format("f(f({})) = {} is not {}", alg.generators()[i],
                                 format_vector(alg, ff), alg.generators()[i])};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = f.apply(bracket(alg, alg.basis_vector(i), alg.basis_vector(j)));
      const Vector rhs = bracket(alg, f.columns[i], f.columns[j]);
      Vector diff = lhs;
      for (std::size_t m = 0; m < n; ++m) diff[m] -= rhs[m];
      if (!is_zero(diff))
        return {false, fmt::format("f([{0},{1}]) = {2} but [f({0}),f({1})] = {3}",
                                   alg.generators()[i], alg.generators()[j],
                                   format_vector(alg, lhs), format_vector(alg, rhs))};
    }
  }
  return {};
}

namespace {

void validate_partition(const LieAlgebra& alg, const Decomposition& d) {
  std::vector<int> seen(alg.dim(), 0);
  for (auto i : d.h) {
    if (i >= alg.dim()) throw Error("decomposition index out of range");
    ++seen[i];
  }
  for (auto i : d.p) {
    if (i >= alg.dim()) throw Error("decomposition index out of range");
    ++seen[i];
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 1)
      throw Error("decomposition is not a partition at generator " + alg.generators()[i]);
}

bool supported_in(const BracketTerms& terms, const std::vector<bool>& allowed) {
  return std::all_of(terms.begin(), terms.end(),
                     [&](const BracketTerm& t) { return allowed[t.gen]; });
}

}  // namespace

DecompositionReport decomposition_check(const LieAlgebra& alg, const Decomposition& d) {
  validate_partition(alg, d);
  std::vector<bool> in_h(alg.dim(), false);
  std::vector<bool> in_p(alg.dim(), false);
  for (auto i : d.h) in_h[i] = true;
  for (auto i : d.p) in_p[i] = true;

  DecompositionReport r;
  r.hh_in_h = true;
  for (auto a : d.h)
    for (auto b : d.h) r.hh_in_h = r.hh_in_h && supported_in(alg.structure(a, b), in_h);
  r.hp_in_p = true;
  for (auto a : d.h)
    for (auto b : d.p) r.hp_in_p = r.hp_in_p && supported_in(alg.structure(a, b), in_p);
  bool zero = true;
  bool inside = true;
  for (auto a : d.p) {
    for (auto b : d.p) {
      const auto& t = alg.structure(a, b);
      zero = zero && t.empty();
      inside = inside && supported_in(t, in_h);
    }
  }
  r.pp = zero ? Containment::Zero : inside ? Containment::InH : Containment::Other;
  return r;
}

Decomposition make_decomposition(const LieAlgebra& alg, const std::vector<std::string>& p,
                                 std::string label) {
  Decomposition d;
  d.label = std::move(label);
  std::vector<bool> in_p(alg.dim(), false);
  for (const auto& g : p) in_p[alg.require(g)] = true;
  for (std::size_t i = 0; i < alg.dim(); ++i) (in_p[i] ? d.p : d.h).push_back(i);
  return d;
}

LieAlgebra iw_contract(const LieAlgebra& alg, const Decomposition& d) {
  validate_partition(alg, d);
  std::vector<int> weight(alg.dim(), 0);
  for (auto i : d.p) weight[i] = 1;

  const std::string eps = "eps";
  auto ctx = alg.context() ? alg.context()->with({eps}, eps)
                           : ParamContext::make({eps}, eps);
  const std::size_t slot = *ctx->index_of(eps);

  LieAlgebra::Builder b(alg.name() + "~iw", alg.generators(), alg.context());
  for (const auto& [key, value] : alg.metadata()) b.metadata(key, value);
  std::string split;
  for (auto i : d.p) split += (split.empty() ? "" : ",") + alg.generators()[i];
  b.metadata("iw_contraction", "p=(" + split + ")");

  for (const auto& [key, terms] : alg.brackets()) {
    const auto [i, j] = key;
    BracketTerms out;
    for (const auto& t : terms) {
      Poly::Exponents e(ctx->size(), 0);
      e[slot] = weight[i] + weight[j] - weight[t.gen];
      Poly scaled = embed(t.coeff, ctx) * Poly::monomial(ctx, std::move(e), 1);
      Poly limit = limit_eps_zero(scaled);
      if (!limit.is_zero()) out.push_back({t.gen, embed(limit, alg.context())});
    }
    b.add(i, j, out);
  }
  return b.build();
}

LieAlgebra specialize(const LieAlgebra& alg, const Assignment& values) {
  LieAlgebra::Builder b(alg.name(), alg.generators(), alg.context());
  for (const auto& [key, value] : alg.metadata()) b.metadata(key, value);
  for (const auto& [name, value] : values) b.metadata("fixed." + name, value.str());
  for (const auto& [key, terms] : alg.brackets()) {
    BracketTerms out;
    for (const auto& t : terms) out.push_back({t.gen, substitute(t.coeff, values)});
    b.add(key.first, key.second, out);
  }
  return b.build();
}

LieAlgebra parameter_contract(const LieAlgebra& alg, std::string_view param) {
  Assignment zero;
  zero.emplace(std::string(param), Poly(0));
  return specialize(alg, zero).with_metadata("parameter_contraction", std::string(param) + "=0");
}

std::optional<std::string> structure_difference(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.generators() != b.generators()) return std::string("generator lists differ");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const auto& ta = a.structure(i, j);
      const auto& tb = b.structure(i, j);
      Vector va = a.zero_vector();
      Vector vb = b.zero_vector();
      for (const auto& t : ta) va[t.gen] = t.coeff;
      for (const auto& t : tb) vb[t.gen] = t.coeff;
      bool same = true;
      for (std::size_t m = 0; m < a.dim(); ++m) same = same && va[m] == vb[m];
      if (!same)
        return fmt::format("[{},{}]: {} vs {}", a.generators()[i], a.generators()[j],
                           format_vector(a, va), format_vector(b, vb));
    }
  }
  return std::nullopt;
}

}  // namespace liexp

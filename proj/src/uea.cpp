#include "liexp/uea.hpp"

#include <algorithm>
#include <numeric>

namespace liexp {

namespace {

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->name() == b->name() && a->generators() == b->generators() &&
         same_context(a->context(), b->context()) && !structure_difference(*a, *b);
}

const AlgebraPtr& common_algebra(const UEAElement& a, const UEAElement& b) {
  if (!same_algebra(a.algebra(), b.algebra()))
    throw AlgebraMismatch("UEA operands belong to different algebras (" + a.algebra()->name() +
                          ", " + b.algebra()->name() + ")");
  return a.algebra();
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Letters to_letters(const Monomial& m) {
  Letters w;
  for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), m[i], static_cast<std::uint16_t>(i));
  return w;
}

// Work-queue key: words are popped longest first, then by inversion count, so
// every rewrite produces strictly smaller keys and equal words meet in the map
// before they are expanded.
struct WorkKey {
  std::uint16_t length;
  std::uint16_t inversions;
  Letters letters;

  bool operator<(const WorkKey& o) const {
    if (length != o.length) return length < o.length;
    if (inversions != o.inversions) return inversions < o.inversions;
    return letters < o.letters;
  }
};

std::uint16_t count_inversions(const Letters& w) {
  std::uint16_t n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

class Rewriter {
 public:
  explicit Rewriter(const AlgebraPtr& alg) : alg_(alg), out_(alg) {}

  void push(Letters w, const Poly& c) {
    if (c.is_zero()) return;
    WorkKey key{static_cast<std::uint16_t>(w.size()), count_inversions(w), std::move(w)};
    push(std::move(key), c);
  }

  UEAElement run() {
    const std::size_t n = alg_->dim();
    while (!work_.empty()) {
      auto node = work_.extract(std::prev(work_.end()));
      const WorkKey& key = node.key();
      const Poly& c = node.mapped();
      const Letters& w = key.letters;

      std::size_t p = 0;
      while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
      if (p + 1 >= w.size()) {
        Monomial m(n, 0);
        for (auto g : w) ++m[g];
        out_.add_term(m, c);
        continue;
      }
      // x_b x_a -> x_a x_b + [x_b, x_a]
      Letters swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      push(WorkKey{key.length, static_cast<std::uint16_t>(key.inversions - 1), std::move(swapped)},
           c);
      for (const auto& t : alg_->structure(w[p], w[p + 1])) {
        Letters shorter;
        shorter.reserve(w.size() - 1);
        shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        shorter.push_back(static_cast<std::uint16_t>(t.gen));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
        auto k = t.coeff.constant_value();
        push(std::move(shorter), k ? c.scaled(*k) : c * t.coeff);
      }
    }
    return std::move(out_);
  }

 private:
  void push(WorkKey key, const Poly& c) {
    auto [it, inserted] = work_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work_.erase(it);
    }
  }

  const AlgebraPtr& alg_;
  std::map<WorkKey, Poly> work_;
  UEAElement out_;
};

void check_letters(const LieAlgebra& alg, const Letters& w) {
  for (auto g : w)
    if (g >= alg.dim()) throw Error("generator index out of range in word");
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

UEAElement::UEAElement(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw Error("UEA element needs an algebra");
}

UEAElement UEAElement::scalar(AlgebraPtr alg, const Poly& c) {
  UEAElement x(std::move(alg));
  x.add_term(Monomial(x.alg_->dim(), 0), c);
  return x;
}

UEAElement UEAElement::generator(AlgebraPtr alg, std::size_t index) {
  UEAElement x(std::move(alg));
  if (index >= x.alg_->dim()) throw Error("generator index out of range");
  Monomial m(x.alg_->dim(), 0);
  m[index] = 1;
  x.add_term(m, 1);
  return x;
}

UEAElement UEAElement::generator(const AlgebraPtr& alg, std::string_view name) {
  return generator(alg, alg->require(name));
}

int UEAElement::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

void UEAElement::add_term(const Monomial& m, const Poly& c) {
  if (c.is_zero()) return;
  if (m.size() != alg_->dim()) throw Error("monomial size does not match algebra");
  auto [it, inserted] = terms_.try_emplace(m, embed(c, alg_->context()));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement UEAElement::operator-() const {
  UEAElement x = *this;
  for (auto& [m, c] : x.terms_) c = -c;
  return x;
}

UEAElement& UEAElement::operator+=(const UEAElement& rhs) {
  common_algebra(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& rhs) {
  common_algebra(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

UEAElement UEAElement::scaled(const Poly& c) const {
  UEAElement x(alg_);
  for (const auto& [m, k] : terms_) x.add_term(m, k * c);
  return x;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return product(a, b); }

bool UEAElement::operator==(const UEAElement& rhs) const {
  if (!same_algebra(alg_, rhs.alg_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (m != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string UEAElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += alg_->generators()[i];
      if (m[i] != 1) factors += "^" + std::to_string(m[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.size() == 1) {
      coeff = c.str();
      if (coeff[0] == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
    } else {
      coeff = factors.empty() ? c.str() : "(" + c.str() + ")";
    }
    std::string term;
    if (factors.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = factors;
    } else {
      term = coeff + "*" + factors;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

UEAElement normal_form(const AlgebraPtr& alg, const std::vector<Word>& words) {
  Rewriter r(alg);
  for (const auto& w : words) {
    check_letters(*alg, w.letters);
    r.push(w.letters, embed(w.coeff, alg->context()));
  }
  return r.run();
}

UEAElement product(const UEAElement& a, const UEAElement& b) {
  const auto& alg = common_algebra(a, b);
  Rewriter r(alg);
  for (const auto& [ma, ca] : a.terms()) {
    const Letters wa = to_letters(ma);
    for (const auto& [mb, cb] : b.terms()) {
      Letters w = wa;
      const Letters wb = to_letters(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      r.push(std::move(w), ca * cb);
    }
  }
  return r.run();
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) {
  const auto& alg = common_algebra(a, b);
  // ab and -ba share one work queue so matching words cancel before rewriting.
  Rewriter r(alg);
  for (const auto& [ma, ca] : a.terms()) {
    const Letters wa = to_letters(ma);
    for (const auto& [mb, cb] : b.terms()) {
      const Letters wb = to_letters(mb);
      const Poly c = ca * cb;
      Letters ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      Letters ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      r.push(std::move(ab), c);
      r.push(std::move(ba), -c);
    }
  }
  return r.run();
}

UEAElement power(const UEAElement& a, unsigned n) {
  UEAElement result = UEAElement::unit(a.algebra());
  for (unsigned i = 0; i < n; ++i) result = product(result, a);
  return result;
}

Centrality is_central(const UEAElement& x) {
  const auto& alg = x.algebra();
  for (std::size_t g = 0; g < alg->dim(); ++g) {
    UEAElement c = commutator(x, UEAElement::generator(alg, g));
    if (!c.is_zero()) return {false, g, std::move(c)};
  }
  return {};
}

UEAElement substitute(const UEAElement& x, const Assignment& values) {
  UEAElement out(x.algebra());
  for (const auto& [m, c] : x.terms()) out.add_term(m, substitute(c, values));
  return out;
}

UEAElement reduce(const UEAElement& x, std::span<const PowerRule> rules) {
  UEAElement out(x.algebra());
  for (const auto& [m, c] : x.terms()) out.add_term(m, reduce(c, rules));
  return out;
}

std::optional<Vector> as_linear(const UEAElement& x) {
  Vector v = x.algebra()->zero_vector();
  for (const auto& [m, c] : x.terms()) {
    if (total_degree(m) != 1) return std::nullopt;
    const auto g = static_cast<std::size_t>(std::find(m.begin(), m.end(), 1) - m.begin());
    v[g] = c;
  }
  return v;
}

UEAElement from_linear(const AlgebraPtr& alg, const Vector& v) {
  if (v.size() != alg->dim()) throw Error("vector dimension does not match algebra");
  UEAElement x(alg);
  for (std::size_t g = 0; g < v.size(); ++g) {
    Monomial m(alg->dim(), 0);
    m[g] = 1;
    x.add_term(m, v[g]);
  }
  return x;
}

namespace {

std::vector<std::uint16_t> letter_map(const LieAlgebra& from, const LieAlgebra& to) {
  std::vector<std::uint16_t> map(from.dim());
  for (std::size_t i = 0; i < from.dim(); ++i)
    map[i] = static_cast<std::uint16_t>(to.require(from.generators()[i]));
  return map;
}

}  // namespace

UEAElement transport(const UEAElement& x, const AlgebraPtr& target) {
  const auto map = letter_map(*x.algebra(), *target);
  std::vector<Word> words;
  for (const auto& [m, c] : x.terms()) {
    Letters w;
    for (auto g : to_letters(m)) w.push_back(map[g]);
    words.push_back({std::move(w), embed(c, target->context())});
  }
  return normal_form(target, words);
}

// ---------------------------------------------------------------------------

void FormalSum::add(const Letters& w, const Poly& c) {
  if (c.is_zero()) return;
  check_letters(*alg_, w);
  auto [it, inserted] = terms_.try_emplace(w, embed(c, alg_->context()));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
  if (!same_algebra(alg_, rhs.alg_)) throw AlgebraMismatch("formal sums over different algebras");
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

FormalSum FormalSum::scaled(const Poly& c) const {
  FormalSum out(alg_);
  for (const auto& [w, k] : terms_) out.add(w, k * c);
  return out;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  if (!same_algebra(a.alg_, b.alg_)) throw AlgebraMismatch("formal sums over different algebras");
  FormalSum out(a.alg_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Letters w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

std::vector<Word> FormalSum::words() const {
  std::vector<Word> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back({w, c});
  return out;
}

UEAElement FormalSum::normal_form() const { return liexp::normal_form(alg_, words()); }

FormalSum FormalSum::transported(const AlgebraPtr& target) const {
  const auto map = letter_map(*alg_, *target);
  FormalSum out(target);
  for (const auto& [w, c] : terms_) {
    Letters t;
    for (auto g : w) t.push_back(map[g]);
    out.add(t, embed(c, target->context()));
  }
  return out;
}

}  // namespace liexp

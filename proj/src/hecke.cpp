#include "heckecenter/hecke.hpp"

#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace hecke {

XiPoly HeckeElement::coeff(const Permutation& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? XiPoly() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const XiPoly& c) {
  if (w.degree() != n_) throw std::invalid_argument("HeckeElement: term degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: degree mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: degree mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const XiPoly& p) const {
  HeckeElement out(n_);
  if (p.is_zero()) return out;
  for (const auto& [w, c] : t_) out.t_.emplace(w, c * p);
  return out;
}

void GroupAlgebraElement::add_term(const Permutation& w, const Int& c) {
  if (w.degree() != n_) throw std::invalid_argument("GroupAlgebraElement: term degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

HeckeElement basis_elt(const Permutation& w) {
  HeckeElement h(w.degree());
  h.add_term(w, XiPoly(1));
  return h;
}

HeckeElement mul_gen(const HeckeElement& h, int i, Side side) {
  if (i < 1 || i >= h.degree()) throw std::invalid_argument("mul_gen: generator index out of range");
  HeckeElement out(h.degree());
  const XiPoly xi = XiPoly::xi();
  for (const auto& [w, c] : h.terms()) {
    if (side == Side::right) {
      out.add_term(w.right_mul_gen(i), c);
      if (w.right_descent(i)) out.add_term(w, c * xi);
    } else {
      out.add_term(w.left_mul_gen(i), c);
      if (w.left_descent(i)) out.add_term(w, c * xi);
    }
  }
  return out;
}

namespace product_cache {
namespace {
std::shared_mutex g_mu;
std::unordered_map<std::pair<Permutation, Permutation>, HeckeElement, PermPairHash> g_map;
std::atomic<bool> g_enabled{true};
std::atomic<size_t> g_budget{1u << 18};
}  // namespace

void set_enabled(bool on) { g_enabled = on; }
bool enabled() { return g_enabled; }
void set_budget(size_t max_entries) { g_budget = max_entries; }
void clear() {
  std::unique_lock lk(g_mu);
  g_map.clear();
}
size_t size() {
  std::shared_lock lk(g_mu);
  return g_map.size();
}

bool lookup(const std::pair<Permutation, Permutation>& key, HeckeElement* out) {
  std::shared_lock lk(g_mu);
  auto it = g_map.find(key);
  if (it == g_map.end()) return false;
  *out = it->second;
  return true;
}

void insert(std::pair<Permutation, Permutation> key, const HeckeElement& value) {
  std::unique_lock lk(g_mu);
  if (g_map.size() >= g_budget) g_map.clear();
  g_map.emplace(std::move(key), value);
}
}  // namespace product_cache

namespace {

/// T_x * T_y by folding the canonical reduced word of y one generator at a
/// time; memoized when the cache is enabled.
HeckeElement basis_product(const Permutation& x, const Permutation& y) {
  if (y.is_identity()) return basis_elt(x);
  const bool use_cache = product_cache::enabled();
  std::pair<Permutation, Permutation> key{x, y};
  if (use_cache) {
    HeckeElement hit(x.degree());
    if (product_cache::lookup(key, &hit)) return hit;
  }
  HeckeElement acc = basis_elt(x);
  for (int i : y.reduced_word()) acc = mul_gen(acc, i, Side::right);
  if (use_cache) product_cache::insert(std::move(key), acc);
  return acc;
}

}  // namespace

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("mul: degree mismatch");
  HeckeElement out(a.degree());
  for (const auto& [y, cy] : b.terms()) {
    for (const auto& [x, cx] : a.terms()) {
      const XiPoly c = cx * cy;
      const HeckeElement prod = basis_product(x, y);
      for (const auto& [z, cz] : prod.terms()) out.add_term(z, cz * c);
    }
  }
  return out;
}

HeckeElement conjugate_by(const Permutation& d, const HeckeElement& h) {
  // both products go through the basis-product memo, which pays off across
  // the many representatives of a norm
  return mul(mul(basis_elt(d.inverse()), h), basis_elt(d));
}

XiPoly inner(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner: degree mismatch");
  XiPoly out;
  const auto& small = a.support_size() <= b.support_size() ? a : b;
  const auto& large = a.support_size() <= b.support_size() ? b : a;
  for (const auto& [w, c] : small.terms()) {
    auto it = large.terms().find(w);
    if (it != large.terms().end()) out += c * it->second;
  }
  return out;
}

HeckeElement project(const HeckeElement& h, const Composition& lam) {
  if (lam.total() != h.degree()) throw std::invalid_argument("project: size mismatch");
  ParabolicSpec p{h.degree(), lam};
  HeckeElement out(h.degree());
  for (const auto& [w, c] : h.terms())
    if (parabolic_contains(p, w)) out.add_term(w, c);
  return out;
}

GroupAlgebraElement specialize_zero(const HeckeElement& h) {
  GroupAlgebraElement out(h.degree());
  for (const auto& [w, c] : h.terms()) out.add_term(w, c.constant_term());
  return out;
}

bool is_nonneg(const HeckeElement& h) {
  for (const auto& [w, c] : h.terms())
    if (!c.is_nonneg()) return false;
  return true;
}

bool leq(const HeckeElement& a, const HeckeElement& b) { return is_nonneg(b - a); }

bool lt(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement d = b - a;
  return !d.is_zero() && is_nonneg(d);
}

bool is_central(const HeckeElement& h) {
  const int n = h.degree();
  for (int i = 1; i < n; ++i) {
    Permutation s = Permutation(n).right_mul_gen(i);
    HeckeElement g = basis_elt(s);
    if (!(mul(h, g) == mul(g, h))) return false;
  }
  return true;
}

HeckeElement embed_shifted(const HeckeElement& h, int offset, int n) {
  const int m = h.degree();
  if (offset < 0 || offset + m > n) throw std::invalid_argument("embed_shifted: range exceeds degree");
  HeckeElement out(n);
  for (const auto& [w, c] : h.terms()) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    for (int i = 1; i <= m; ++i) img[static_cast<size_t>(offset + i - 1)] = w(i) + offset;
    out.add_term(Permutation::from_images(std::move(img)), c);
  }
  return out;
}

}  // namespace hecke

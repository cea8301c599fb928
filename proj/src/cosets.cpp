#include "heckecenter/cosets.hpp"

#include "heckecenter/symgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace hecke {

namespace {

struct LengthLexLess {
  bool operator()(const Permutation& a, const Permutation& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.images() < b.images();
  }
};

using ShapeKey = std::pair<int, std::vector<int>>;
ShapeKey key_of(const ParabolicSpec& p) { return {p.n, p.shape.parts()}; }

std::mutex g_mu;
std::map<ShapeKey, std::vector<Permutation>> g_elements;
std::map<std::pair<ShapeKey, ShapeKey>, std::vector<Permutation>> g_reps;

}  // namespace

std::vector<int> ParabolicSpec::generators() const {
  std::vector<int> g;
  int offset = 0;
  for (int p : shape.parts()) {
    for (int i = offset + 1; i < offset + p; ++i) g.push_back(i);
    offset += p;
  }
  return g;
}

bool parabolic_contains(const ParabolicSpec& p, const Permutation& w) {
  int offset = 0;
  for (int part : p.shape.parts()) {
    for (int i = offset + 1; i <= offset + part; ++i) {
      int im = w(i);
      if (im <= offset || im > offset + part) return false;
    }
    offset += part;
  }
  return true;
}

const std::vector<Permutation>& parabolic_elements(const ParabolicSpec& p) {
  const auto key = key_of(p);
  {
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_elements.find(key);
    if (it != g_elements.end()) return it->second;
  }
  const auto gens = p.generators();
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  Permutation id(p.n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation w = frontier.front();
    frontier.pop_front();
    for (int i : gens) {
      Permutation x = w.right_mul_gen(i);
      if (seen.insert(x).second) frontier.push_back(x);
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), LengthLexLess{});
  std::lock_guard<std::mutex> lk(g_mu);
  return g_elements.emplace(key, std::move(out)).first->second;
}

Composition composition_from_generators(int n, const std::vector<bool>& take) {
  if (static_cast<int>(take.size()) != n + 1)
    throw std::invalid_argument("composition_from_generators: flag vector must be indexed 0..n");
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (take[static_cast<size_t>(i)]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

Permutation min_right_coset_rep(const ParabolicSpec& sub, Permutation x) {
  const auto gens = sub.generators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : gens) {
      if (x.left_descent(j)) {
        x = x.left_mul_gen(j);
        changed = true;
      }
    }
  }
  return x;
}

const std::vector<Permutation>& dist_right_coset_reps(const ParabolicSpec& sub,
                                                      const ParabolicSpec& sup) {
  if (sub.n != sup.n) throw std::invalid_argument("coset reps: degree mismatch");
  if (!refinement_leq(sub.shape, sup.shape))
    throw std::invalid_argument("coset reps: subgroup shape must refine supergroup shape");
  const auto key = std::make_pair(key_of(sub), key_of(sup));
  {
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_reps.find(key);
    if (it != g_reps.end()) return it->second;
  }
  const auto supgens = sup.generators();
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  Permutation id(sub.n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation d = frontier.front();
    frontier.pop_front();
    for (int i : supgens) {
      Permutation x = min_right_coset_rep(sub, d.right_mul_gen(i));
      if (seen.insert(x).second) frontier.push_back(x);
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), LengthLexLess{});
  std::lock_guard<std::mutex> lk(g_mu);
  return g_reps.emplace(key, std::move(out)).first->second;
}

std::vector<Permutation> dist_double_coset_reps(const ParabolicSpec& a, const ParabolicSpec& b) {
  if (a.n != b.n) throw std::invalid_argument("double coset reps: degree mismatch");
  const auto lg = a.generators();
  const auto rg = b.generators();
  std::set<Permutation> reps;
  for (const auto& w : all_permutations(a.n)) {
    Permutation x = w;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int j : lg) {
        if (x.left_descent(j)) {
          x = x.left_mul_gen(j);
          changed = true;
        }
      }
      for (int j : rg) {
        if (x.right_descent(j)) {
          x = x.right_mul_gen(j);
          changed = true;
        }
      }
    }
    reps.insert(x);
  }
  std::vector<Permutation> out(reps.begin(), reps.end());
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

Permutation d_element(int n, int k, int m) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("d_element: k out of range");
  if (m < 0 || m > std::min(k, n - k)) throw std::invalid_argument("d_element: m out of range");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  for (int j = 0; j < m; ++j) std::swap(img[static_cast<size_t>(k - j - 1)], img[static_cast<size_t>(k + m - j - 1)]);
  return Permutation::from_images(std::move(img));
}

Composition p_m_shape(int n, int k, int m) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("p_m_shape: k out of range");
  if (m < 0 || m > std::min(k, n - k)) throw std::invalid_argument("p_m_shape: m out of range");
  std::vector<int> parts;
  for (int p : {k - m, m, m, n - k - m})
    if (p > 0) parts.push_back(p);
  if (parts.empty()) throw internal_error("p_m_shape: empty shape");
  return Composition(std::move(parts));
}

std::vector<Permutation> normalizer_elements(int n, const Composition& shape) {
  ParabolicSpec p{n, shape};
  const auto& sub = parabolic_elements(p);
  std::set<Permutation> subset(sub.begin(), sub.end());
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n)) {
    Permutation wi = w.inverse();
    bool ok = true;
    for (const auto& u : sub) {
      if (!subset.count(w * u * wi)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

void clear_coset_caches() {
  std::lock_guard<std::mutex> lk(g_mu);
  g_elements.clear();
  g_reps.clear();
}

Int normalizer_index(int n, const Composition& shape) {
  const auto norm = normalizer_elements(n, shape);
  const auto& sub = parabolic_elements(ParabolicSpec{n, shape});
  if (norm.size() % sub.size() != 0) throw internal_error("normalizer_index: inexact index");
  return Int(norm.size() / sub.size());
}

}  // namespace hecke

#include "heckecenter/symgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hecke {

namespace {

struct LengthLexLess {
  bool operator()(const Permutation& a, const Permutation& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.images() < b.images();
  }
};

std::mutex g_cache_mu;
std::map<int, std::vector<Permutation>> g_sn_cache;
std::map<std::pair<int, std::vector<int>>, std::vector<Permutation>> g_class_cache;
std::map<std::pair<int, std::vector<int>>, std::vector<Permutation>> g_minlen_cache;

}  // namespace

Partition cycle_type(const Permutation& w) {
  const int n = w.degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> lens;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int c = 0, j = i;
    while (!seen[static_cast<size_t>(j - 1)]) {
      seen[static_cast<size_t>(j - 1)] = true;
      j = w(j);
      ++c;
    }
    lens.push_back(c);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(std::move(lens));
}

std::vector<int> coxeter_word(const Composition& lam) {
  std::vector<int> word;
  int offset = 0;
  for (int p : lam.parts()) {
    for (int i = offset + 1; i < offset + p; ++i) word.push_back(i);
    offset += p;
  }
  return word;
}

Permutation canonical_coxeter(int n, const Composition& lam) {
  if (lam.total() != n) throw std::invalid_argument("canonical_coxeter: component sum mismatch");
  return Permutation::from_word(n, coxeter_word(lam));
}

const std::vector<Permutation>& all_permutations(int n) {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  auto it = g_sn_cache.find(n);
  if (it != g_sn_cache.end()) return it->second;
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return g_sn_cache.emplace(n, std::move(out)).first->second;
}

const std::vector<Permutation>& conjugacy_class(int n, const Partition& lam) {
  if (lam.total() != n) throw std::invalid_argument("conjugacy_class: not a partition of n");
  const auto key = std::make_pair(n, lam.parts());
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_class_cache.find(key);
    if (it != g_class_cache.end()) return it->second;
  }
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (cycle_type(w) == lam) out.push_back(w);
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_class_cache.emplace(key, std::move(out)).first->second;
}

void clear_symgroup_caches() {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_sn_cache.clear();
  g_class_cache.clear();
  g_minlen_cache.clear();
}

const std::vector<Permutation>& min_length_class_elements(int n, const Partition& lam) {
  const auto key = std::make_pair(n, lam.parts());
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_minlen_cache.find(key);
    if (it != g_minlen_cache.end()) return it->second;
  }
  const auto& cls = conjugacy_class(n, lam);  // already length-sorted
  const int m = cls.front().length();
  std::vector<Permutation> out;
  for (const auto& w : cls) {
    if (w.length() != m) break;
    out.push_back(w);
  }
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return g_minlen_cache.emplace(key, std::move(out)).first->second;
}

}  // namespace hecke

#include "heckecenter/perm.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  img_.resize(static_cast<size_t>(n));
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation w;
  w.img_ = std::move(images);
  const int n = w.degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int x : w.img_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x - 1)])
      throw std::invalid_argument("one-line notation is not a bijection of 1..n");
    seen[static_cast<size_t>(x - 1)] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.img_[static_cast<size_t>(i)] > w.img_[static_cast<size_t>(j)]) ++w.len_;
  return w;
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  Permutation w(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
  }
  w.len_ = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.img_[static_cast<size_t>(i)] > w.img_[static_cast<size_t>(j)]) ++w.len_;
  return w;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) w.img_[static_cast<size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
  w.len_ = len_;
  return w;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation w;
  w.img_.resize(a.img_.size());
  for (size_t i = 0; i < a.img_.size(); ++i)
    w.img_[i] = a.img_[static_cast<size_t>(b.img_[i] - 1)];
  const int n = w.degree();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.img_[static_cast<size_t>(i)] > w.img_[static_cast<size_t>(j)]) ++w.len_;
  return w;
}

Permutation Permutation::right_mul_gen(int i) const {
  if (i < 1 || i >= degree()) throw std::invalid_argument("generator index out of range");
  Permutation w(*this);
  const bool desc = right_descent(i);
  std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
  w.len_ += desc ? -1 : 1;
  return w;
}

Permutation Permutation::left_mul_gen(int i) const {
  if (i < 1 || i >= degree()) throw std::invalid_argument("generator index out of range");
  Permutation w(*this);
  const bool desc = left_descent(i);
  for (auto& x : w.img_) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  w.len_ += desc ? -1 : 1;
  return w;
}

bool Permutation::right_descent(int i) const {
  return img_[static_cast<size_t>(i - 1)] > img_[static_cast<size_t>(i)];
}

bool Permutation::left_descent(int i) const {
  // position of value i vs position of value i+1
  int pi = 0, pj = 0;
  for (size_t k = 0; k < img_.size(); ++k) {
    if (img_[k] == i) pi = static_cast<int>(k);
    else if (img_[k] == i + 1) pj = static_cast<int>(k);
  }
  return pi > pj;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(len_));
  std::vector<int> v = img_;
  const int n = degree();
  for (;;) {
    int i = 0;
    for (int k = 1; k < n; ++k) {
      if (v[static_cast<size_t>(k - 1)] > v[static_cast<size_t>(k)]) {
        i = k;
        break;
      }
    }
    if (i == 0) break;
    std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
    out.push_back(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

size_t Permutation::hash() const {
  size_t h = 1469598103934665603ull;
  for (int x : img_) {
    h ^= static_cast<size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  if (v.length() > w.length()) return false;
  const int n = v.degree();
  // sorted-prefix dominance: for each prefix length, the increasingly sorted
  // prefix of v must be entrywise <= the one of w
  std::vector<int> sv, sw;
  sv.reserve(static_cast<size_t>(n));
  sw.reserve(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) {
    sv.insert(std::upper_bound(sv.begin(), sv.end(), v(i)), v(i));
    sw.insert(std::upper_bound(sw.begin(), sw.end(), w(i)), w(i));
    for (int k = 0; k < i; ++k)
      if (sv[static_cast<size_t>(k)] > sw[static_cast<size_t>(k)]) return false;
  }
  return true;
}

int hash_count(const Permutation& w, int k) {
  if (k < 1 || k >= w.degree()) throw std::invalid_argument("hash_count: k out of range");
  int c = 0;
  for (int i = 1; i <= k; ++i)
    if (w(i) > k) ++c;
  return c;
}

}  // namespace hecke

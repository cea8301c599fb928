#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hecke {

/// Element of S_n in one-line notation: position i (1-based) holds w(i).
///
/// Products compose as functions, (u*v)(x) = u(v(x)), so a word applied left
/// to right builds up by right multiplication: s_{i_1} * ... * s_{i_r} is
/// obtained from the identity by swapping positions i_j, i_j+1 in turn.
/// The length (inversion count) is maintained incrementally.
class Permutation {
public:
  explicit Permutation(int n);  // identity
  static Permutation from_images(std::vector<int> images);
  static Permutation from_word(int n, std::span<const int> word);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const { return len_ == 0; }
  int length() const { return len_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// w * s_i (swaps the entries at positions i, i+1).
  Permutation right_mul_gen(int i) const;
  /// s_i * w (swaps the values i, i+1).
  Permutation left_mul_gen(int i) const;

  /// True iff l(w * s_i) < l(w), i.e. w(i) > w(i+1).
  bool right_descent(int i) const;
  /// True iff l(s_i * w) < l(w).
  bool left_descent(int i) const;

  /// Deterministic reduced word: repeatedly strip the smallest right descent.
  std::vector<int> reduced_word() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

  size_t hash() const;

private:
  Permutation() = default;
  std::vector<int> img_;
  int len_ = 0;
};

/// v <= w in the Bruhat order (sorted-prefix dominance criterion; agrees with
/// the subword definition).
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// |w.{1..k} intersect {k+1..n}|: the number of i <= k with w(i) > k. Equals
/// the minimal number of occurrences of the generator s_k in any reduced word
/// for w.
int hash_count(const Permutation& w, int k);

struct PermHash {
  size_t operator()(const Permutation& p) const { return p.hash(); }
};

struct PermPairHash {
  size_t operator()(const std::pair<Permutation, Permutation>& xy) const {
    return xy.first.hash() * 1000003u ^ xy.second.hash();
  }
};

}  // namespace hecke

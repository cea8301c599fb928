#pragma once

#include "heckecenter/combin.hpp"
#include "heckecenter/perm.hpp"

#include <vector>

namespace hecke {

/// Young subgroup S_shape of S_n, generated by the consecutive runs of simple
/// reflections skipping one index at each block boundary.
struct ParabolicSpec {
  int n;
  Composition shape;

  ParabolicSpec(int n_, Composition shape_) : n(n_), shape(std::move(shape_)) {
    if (shape.total() != n) throw std::invalid_argument("parabolic shape must sum to n");
  }

  /// Indices i with s_i in S_shape.
  std::vector<int> generators() const;

  friend bool operator==(const ParabolicSpec& a, const ParabolicSpec& b) {
    return a.n == b.n && a.shape == b.shape;
  }
};

/// Membership test: w preserves every block of the shape.
bool parabolic_contains(const ParabolicSpec& p, const Permutation& w);

/// All elements, sorted by (length, one-line). Cached per spec.
const std::vector<Permutation>& parabolic_elements(const ParabolicSpec& p);

/// The standard parabolic of S_n whose generator set is {i : take[i]}.
Composition composition_from_generators(int n, const std::vector<bool>& take);

/// Minimal element of the right coset S_sub * x (left-divide by descents of
/// the subgroup).
Permutation min_right_coset_rep(const ParabolicSpec& sub, Permutation x);

/// The distinguished (minimal-length) representatives of the right cosets of
/// S_sub in S_sup, sorted by (length, one-line). Requires sub.shape to refine
/// sup.shape. Enumeration walks the coset graph inside S_sup only. Cached.
const std::vector<Permutation>& dist_right_coset_reps(const ParabolicSpec& sub,
                                                      const ParabolicSpec& sup);

/// The distinguished representatives of the S_a--S_b double cosets in S_n,
/// sorted by (length, one-line).
std::vector<Permutation> dist_double_coset_reps(const ParabolicSpec& a, const ParabolicSpec& b);

/// The involution (k k+m)(k-1 k+m-1)...(k+1-m k+1); identity for m = 0.
Permutation d_element(int n, int k, int m);

/// The shape (k-m, m, m, n-k-m) with zero parts dropped.
Composition p_m_shape(int n, int k, int m);

/// Elements w of S_n with S_shape^w = S_shape.
std::vector<Permutation> normalizer_elements(int n, const Composition& shape);

/// [N_{S_n}(S_shape) : S_shape], by enumeration.
Int normalizer_index(int n, const Composition& shape);

/// Drop the element and representative memos.
void clear_coset_caches();

}  // namespace hecke

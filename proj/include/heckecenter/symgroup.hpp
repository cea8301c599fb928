#pragma once

#include "heckecenter/combin.hpp"
#include "heckecenter/perm.hpp"

#include <vector>

namespace hecke {

/// Multiset of cycle lengths, fixed points included, weakly decreasing.
Partition cycle_type(const Permutation& w);

/// The product of consecutive generator runs determined by lam, one run per
/// component; a minimal-length element of the class of cycle type sort(lam).
Permutation canonical_coxeter(int n, const Composition& lam);

/// Generator word of canonical_coxeter(n, lam).
std::vector<int> coxeter_word(const Composition& lam);

/// All elements of S_n with cycle type lam, sorted by (length, one-line).
/// Cached per (n, lam).
const std::vector<Permutation>& conjugacy_class(int n, const Partition& lam);

/// The subset of conjugacy_class(n, lam) of minimal length. Cached.
const std::vector<Permutation>& min_length_class_elements(int n, const Partition& lam);

/// All of S_n, sorted by (length, one-line). Cached.
const std::vector<Permutation>& all_permutations(int n);

/// Drop the class and group memos.
void clear_symgroup_caches();

}  // namespace hecke

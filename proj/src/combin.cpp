#include "heckecenter/combin.hpp"

#include "heckecenter/cosets.hpp"
#include "heckecenter/perm.hpp"
#include "heckecenter/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hecke {

Composition::Composition(std::vector<int> parts) : p_(std::move(parts)) {
  if (p_.empty()) throw std::invalid_argument("composition must be nonempty");
  for (int x : p_) {
    if (x < 1) throw std::invalid_argument("composition parts must be positive");
    total_ += x;
  }
}

Partition::Partition(std::vector<int> parts) : Composition(std::move(parts)) {
  const auto& p = this->parts();
  if (!std::is_sorted(p.begin(), p.end(), std::greater<int>()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
}

Partition Partition::sorted_from(const Composition& c) {
  std::vector<int> p = c.parts();
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

Composition Multipartition::derived_composition() const {
  std::vector<int> parts;
  for (const auto& blk : b_)
    parts.insert(parts.end(), blk.parts().begin(), blk.parts().end());
  return Composition(std::move(parts));
}

Composition Multipartition::shape() const {
  std::vector<int> parts;
  parts.reserve(b_.size());
  for (const auto& blk : b_) parts.push_back(blk.total());
  return Composition(std::move(parts));
}

bool refinement_leq(const Composition& mu, const Composition& lam) {
  if (mu.total() != lam.total()) throw std::invalid_argument("refinement_leq: size mismatch");
  size_t i = 0;
  for (int target : lam.parts()) {
    int s = 0;
    while (s < target) {
      if (i >= mu.parts().size()) return false;
      s += mu.parts()[i++];
    }
    if (s != target) return false;
  }
  return i == mu.parts().size();
}

Composition lambda_minus_one(const Composition& lam) {
  std::vector<int> out;
  for (int p : lam.parts()) {
    if (p > 1) {
      out.push_back(p - 1);
      out.push_back(1);
    } else {
      out.push_back(1);
    }
  }
  return Composition(std::move(out));
}

int l_lambda(const Composition& lam) { return lam.total() - lam.size(); }

bool conjugate_compositions(const Composition& a, const Composition& b) {
  std::vector<int> x = a.parts(), y = b.parts();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::vector<Composition> split_by_blocks(const Composition& lam, const Composition& mu) {
  if (!refinement_leq(mu, lam)) throw std::invalid_argument("split_by_blocks: mu does not refine lam");
  std::vector<Composition> out;
  size_t i = 0;
  for (int target : lam.parts()) {
    std::vector<int> blk;
    int s = 0;
    while (s < target) {
      blk.push_back(mu.parts()[i]);
      s += mu.parts()[i++];
    }
    out.emplace_back(std::move(blk));
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, mx); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of: n must be positive");
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Multipartition> multipartitions_of_shape(const Composition& lam) {
  std::vector<std::vector<Partition>> acc{{}};
  for (int p : lam.parts()) {
    auto block_choices = partitions_of(p);
    std::vector<std::vector<Partition>> next;
    next.reserve(acc.size() * block_choices.size());
    for (const auto& prefix : acc)
      for (const auto& blk : block_choices) {
        auto t = prefix;
        t.push_back(blk);
        next.push_back(std::move(t));
      }
    acc = std::move(next);
  }
  std::vector<Multipartition> out;
  out.reserve(acc.size());
  for (auto& t : acc) out.emplace_back(std::move(t));
  return out;
}

std::vector<Multipartition> multipartitions_of(const Composition& lam, const Partition& alpha) {
  if (lam.total() != alpha.total()) throw std::invalid_argument("multipartitions_of: size mismatch");
  std::vector<Multipartition> out;
  std::vector<Partition> blocks;
  std::vector<int> pool = alpha.parts();  // weakly decreasing

  // Fill blocks left to right; within a block pick parts weakly decreasing
  // from the remaining pool, skipping equal candidates at the same depth so
  // each multipartition is generated exactly once.
  std::function<void(size_t, std::vector<int>&)> next_block;
  std::function<void(size_t, int, std::vector<int>&, std::vector<int>&, size_t)> choose;

  next_block = [&](size_t bi, std::vector<int>& avail) {
    if (bi == lam.parts().size()) {
      if (avail.empty()) out.emplace_back(Multipartition(blocks));
      return;
    }
    std::vector<int> cur;
    choose(bi, lam.part(static_cast<int>(bi)), avail, cur, 0);
  };

  choose = [&](size_t bi, int target, std::vector<int>& avail, std::vector<int>& cur, size_t start) {
    if (target == 0) {
      blocks.emplace_back(Partition(cur));
      next_block(bi + 1, avail);
      blocks.pop_back();
      return;
    }
    int prev = -1;
    for (size_t idx = start; idx < avail.size(); ++idx) {
      int p = avail[idx];
      if (p == prev || p > target) continue;
      prev = p;
      cur.push_back(p);
      std::vector<int> rest;
      rest.reserve(avail.size() - 1);
      rest.insert(rest.end(), avail.begin(), avail.begin() + static_cast<long>(idx));
      rest.insert(rest.end(), avail.begin() + static_cast<long>(idx) + 1, avail.end());
      // continue from the same index so each block stays weakly decreasing
      choose(bi, target - p, rest, cur, idx);
      cur.pop_back();
    }
  };

  next_block(0, pool);
  return out;
}

Int centralizer_order(int n, const Partition& alpha) {
  if (alpha.total() != n) throw std::invalid_argument("centralizer_order: not a partition of n");
  Int z = 1;
  const auto& p = alpha.parts();
  for (size_t i = 0; i < p.size();) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    size_t mult = j - i;
    for (size_t m = 0; m < mult; ++m) z *= p[i];
    for (size_t m = 2; m <= mult; ++m) z *= static_cast<long>(m);
    i = j;
  }
  return z;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int class_size(const Partition& lam) {
  return factorial(lam.total()) / centralizer_order(lam.total(), lam);
}

Int class_size_in_parabolic(const Composition& lam, const Multipartition& theta) {
  if (theta.shape() != lam) throw std::invalid_argument("class_size_in_parabolic: shape mismatch");
  Int s = 1;
  for (const auto& blk : theta.blocks()) s *= class_size(blk);
  return s;
}

Int perm_character(int n, const Composition& lam, const Partition& alpha) {
  if (lam.total() != n || alpha.total() != n)
    throw std::invalid_argument("perm_character: size mismatch");
  Int sum = 0;
  for (const auto& theta : multipartitions_of(lam, alpha))
    sum += class_size_in_parabolic(lam, theta);
  if (sum == 0) return 0;
  Int num = factorial(n) * sum;
  Int den = class_size(alpha);
  for (int p : lam.parts()) den *= factorial(p);
  if (num % den != 0) throw internal_error("perm_character: inexact division");
  return num / den;
}

Int perm_character_oracle(int n, const Composition& lam, const Partition& alpha, int bound) {
  if (lam.total() != n || alpha.total() != n)
    throw std::invalid_argument("perm_character_oracle: size mismatch");
  if (n > bound) throw std::invalid_argument("perm_character_oracle: bound exceeded");
  Permutation w = canonical_coxeter(n, Composition(alpha.parts()));
  ParabolicSpec sub{n, lam};
  ParabolicSpec whole{n, Composition({n})};
  Int fixed = 0;
  // The cosets d^{-1}*S_lam over the distinguished right representatives d
  // enumerate S_n/S_lam once each; w fixes d^{-1}*S_lam iff d*w*d^{-1} lies
  // in S_lam.
  for (const auto& d : dist_right_coset_reps(sub, whole)) {
    Permutation conj = d * w * d.inverse();
    if (parabolic_contains(sub, conj)) ++fixed;
  }
  return fixed;
}

}  // namespace hecke

#pragma once

#include "heckecenter/xipoly.hpp"

#include <vector>

namespace hecke {

/// Ordered sequence of positive parts.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return p_; }
  int total() const { return total_; }
  int size() const { return static_cast<int>(p_.size()); }
  int part(int i) const { return p_[static_cast<size_t>(i)]; }

  friend bool operator==(const Composition& a, const Composition& b) { return a.p_ == b.p_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.p_ <=> b.p_; }

private:
  std::vector<int> p_;
  int total_ = 0;
};

/// Composition with weakly decreasing parts.
class Partition : public Composition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// Sort the parts of an arbitrary composition.
  static Partition sorted_from(const Composition& c);
};

/// Ordered sequence of partitions. The derived composition is the
/// concatenation of all block parts.
class Multipartition {
public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> blocks) : b_(std::move(blocks)) {}

  const std::vector<Partition>& blocks() const { return b_; }
  Composition derived_composition() const;
  /// Per-block totals, i.e. the shape lambda with block i a partition of lambda_i.
  Composition shape() const;

  friend bool operator==(const Multipartition& a, const Multipartition& b) { return a.b_ == b.b_; }
  friend auto operator<=>(const Multipartition& a, const Multipartition& b) { return a.b_ <=> b.b_; }

private:
  std::vector<Partition> b_;
};

/// True iff lam can be obtained from mu by adding adjacent components.
bool refinement_leq(const Composition& mu, const Composition& lam);

/// Each part p > 1 becomes the pair (p-1, 1); parts equal to 1 are unchanged.
Composition lambda_minus_one(const Composition& lam);

/// Sum of (part - 1) over all parts.
int l_lambda(const Composition& lam);

/// True iff the part multisets agree.
bool conjugate_compositions(const Composition& a, const Composition& b);

/// Cut mu into consecutive groups summing to the parts of lam.
/// Requires refinement_leq(mu, lam).
std::vector<Composition> split_by_blocks(const Composition& lam, const Composition& mu);

std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);

/// All lambda-multipartitions: block i ranges over the partitions of lambda_i.
std::vector<Multipartition> multipartitions_of_shape(const Composition& lam);

/// The lambda-multipartitions whose combined parts are exactly the parts of
/// alpha. Returned in a deterministic backtracking order; may be empty.
std::vector<Multipartition> multipartitions_of(const Composition& lam, const Partition& alpha);

Int factorial(int n);

/// Order of the centralizer in S_n of an element of cycle type alpha:
/// the product over distinct part sizes i of i^{m_i} * m_i!.
Int centralizer_order(int n, const Partition& alpha);

/// Number of elements of S_m with cycle type lam (|lam| = m).
Int class_size(const Partition& lam);

/// Size of the conjugacy class of S_lambda indexed by theta: the product of
/// the per-block class sizes.
Int class_size_in_parabolic(const Composition& lam, const Multipartition& theta);

/// Value at the class alpha of the character of S_n induced from the trivial
/// character of S_lambda. Computed exactly as
/// (n! / |S_lambda| / |C_alpha|) * sum over theta of |C_theta|; the division
/// must be exact and the result is a nonnegative integer.
Int perm_character(int n, const Composition& lam, const Partition& alpha);

/// Independent cross-check: counts the cosets x*S_lambda fixed by a fixed
/// representative of the class alpha. Requires n <= bound.
Int perm_character_oracle(int n, const Composition& lam, const Partition& alpha, int bound = 7);

}  // namespace hecke

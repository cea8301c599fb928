#pragma once

#include "heckecenter/combin.hpp"
#include "heckecenter/cosets.hpp"
#include "heckecenter/perm.hpp"
#include "heckecenter/xipoly.hpp"

#include <map>

namespace hecke {

enum class Side { left, right };

/// (length, one-line) order used for canonical term iteration everywhere.
struct TermOrder {
  bool operator()(const Permutation& a, const Permutation& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.images() < b.images();
  }
};

/// Element of the Iwahori-Hecke algebra of S_n over Z[xi] on the normalized
/// basis {T_w}: a finitely supported map w -> coefficient. Invariants: no
/// zero polynomials stored, all keys of degree n.
class HeckeElement {
public:
  using Terms = std::map<Permutation, XiPoly, TermOrder>;

  explicit HeckeElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("HeckeElement degree must be positive");
  }

  int degree() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t support_size() const { return t_.size(); }

  XiPoly coeff(const Permutation& w) const;
  void add_term(const Permutation& w, const XiPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { a += b; return a; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { a -= b; return a; }
  HeckeElement scaled(const XiPoly& p) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

private:
  int n_;
  Terms t_;
};

/// Element of the group algebra Z S_n (the xi = 0 specialization target).
class GroupAlgebraElement {
public:
  using Terms = std::map<Permutation, Int, TermOrder>;

  explicit GroupAlgebraElement(int n) : n_(n) {}
  int degree() const { return n_; }
  const Terms& terms() const { return t_; }
  void add_term(const Permutation& w, const Int& c);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

private:
  int n_;
  Terms t_;
};

/// The single term T_w with coefficient 1.
HeckeElement basis_elt(const Permutation& w);

/// Multiply by the generator T_{s_i} on the chosen side. Per basis term T_w:
/// when the length goes up the term moves to T_{w s_i}; otherwise the
/// quadratic relation contributes T_{w s_i} + xi T_w (mirrored on the left).
HeckeElement mul_gen(const HeckeElement& h, int i, Side side);

HeckeElement mul(const HeckeElement& a, const HeckeElement& b);

/// T_{d^{-1}} * h * T_d.
HeckeElement conjugate_by(const Permutation& d, const HeckeElement& h);

/// Coefficient-wise bilinear pairing sum_w r_w r'_w.
XiPoly inner(const HeckeElement& a, const HeckeElement& b);

/// Keep exactly the terms whose permutation lies in S_lam.
HeckeElement project(const HeckeElement& h, const Composition& lam);

/// Replace every coefficient by its constant term, dropping zeros.
GroupAlgebraElement specialize_zero(const HeckeElement& h);

/// Membership in H^+ = sum of N[xi]-multiples of basis elements.
bool is_nonneg(const HeckeElement& h);
/// a <= b iff b - a lies in H^+; strict variant also requires a != b.
bool leq(const HeckeElement& a, const HeckeElement& b);
bool lt(const HeckeElement& a, const HeckeElement& b);

/// True iff h commutes with every generator.
bool is_central(const HeckeElement& h);

/// Image of h under the embedding that shifts the support permutations to act
/// on {offset+1, ..., offset+m} inside S_n.
HeckeElement embed_shifted(const HeckeElement& h, int offset, int n);

/// Memo for basis products T_x * T_y, shared across threads; idempotent
/// insert, whole-cache reset when the entry budget is exceeded.
namespace product_cache {
void set_enabled(bool on);
bool enabled();
void set_budget(size_t max_entries);
void clear();
size_t size();
}  // namespace product_cache

}  // namespace hecke

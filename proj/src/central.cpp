#include "heckecenter/central.hpp"

#include "heckecenter/cosets.hpp"
#include "heckecenter/symgroup.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

namespace parallel {
namespace {
#ifdef _OPENMP
std::atomic<bool> g_enabled{true};
#else
std::atomic<bool> g_enabled{false};
#endif
}  // namespace

void set_enabled(bool on) {
#ifndef _OPENMP
  if (on) return;  // no OpenMP at build time; stay serial
#endif
  g_enabled = on;
}

bool enabled() { return g_enabled; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int k) {
#ifdef _OPENMP
  if (k > 0) omp_set_num_threads(k);
#else
  (void)k;
#endif
}
}  // namespace parallel

HeckeElement relative_norm_serial(const Composition& sup, const Composition& sub,
                                  const HeckeElement& h) {
  const int n = h.degree();
  if (sup.total() != n || sub.total() != n)
    throw std::invalid_argument("relative_norm: composition size must match element degree");
  const auto& reps = dist_right_coset_reps(ParabolicSpec{n, sub}, ParabolicSpec{n, sup});
  HeckeElement acc(n);
  for (const auto& d : reps) acc += conjugate_by(d, h);
  return acc;
}

HeckeElement relative_norm_parallel(const Composition& sup, const Composition& sub,
                                    const HeckeElement& h) {
  const int n = h.degree();
  if (sup.total() != n || sub.total() != n)
    throw std::invalid_argument("relative_norm: composition size must match element degree");
  const auto& reps = dist_right_coset_reps(ParabolicSpec{n, sub}, ParabolicSpec{n, sup});
#ifdef _OPENMP
  std::vector<HeckeElement> partial(static_cast<size_t>(parallel::max_threads()), HeckeElement(n));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(reps.size()); ++i) {
    HeckeElement t = conjugate_by(reps[static_cast<size_t>(i)], h);
    partial[static_cast<size_t>(omp_get_thread_num())] += t;
  }
  HeckeElement acc(n);
  for (auto& p : partial) acc += p;
  return acc;
#else
  HeckeElement acc(n);
  for (const auto& d : reps) acc += conjugate_by(d, h);
  return acc;
#endif
}

HeckeElement relative_norm(const Composition& sup, const Composition& sub,
                           const HeckeElement& h) {
  return parallel::enabled() ? relative_norm_parallel(sup, sub, h)
                             : relative_norm_serial(sup, sub, h);
}

namespace {

/// eta of a single run (p) computed in degree p.
HeckeElement eta_block(int p) {
  Composition run({p});
  std::vector<int> ones(static_cast<size_t>(p), 1);
  return relative_norm_serial(lambda_minus_one(run), Composition(std::move(ones)),
                              basis_elt(canonical_coxeter(p, run)));
}

}  // namespace

HeckeElement eta(int n, const Composition& lam) {
  if (lam.total() != n) throw std::invalid_argument("eta: composition size mismatch");
  HeckeElement out = basis_elt(Permutation(n));
  int offset = 0;
  for (int p : lam.parts()) {
    out = mul(out, embed_shifted(eta_block(p), offset, n));
    offset += p;
  }
  return out;
}

HeckeElement eta_multipartition(int n, const Multipartition& theta) {
  if (theta.derived_composition().total() != n)
    throw std::invalid_argument("eta_multipartition: size mismatch");
  HeckeElement out = basis_elt(Permutation(n));
  int offset = 0;
  for (const auto& blk : theta.blocks()) {
    out = mul(out, embed_shifted(eta(blk.total(), blk), offset, n));
    offset += blk.total();
  }
  return out;
}

const std::vector<Partition>& partitions_in_table_order(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto parts = partitions_of(n);
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
    if (l_lambda(a) != l_lambda(b)) return l_lambda(a) < l_lambda(b);
    return a.parts() > b.parts();
  });
  return cache.emplace(n, std::move(parts)).first->second;
}

// ---------------------------------------------------------------------------
// per-degree center data: the norm basis and the solved gamma basis

namespace {

struct CenterData {
  std::map<Partition, HeckeElement> norms;
  std::map<Partition, HeckeElement> gammas;
};

std::mutex g_center_mu;
std::map<int, CenterData> g_center;

HeckeElement compute_norm_b(int n, const Partition& alpha) {
  return relative_norm(Composition({n}), Composition(alpha.parts()), eta(n, Composition(alpha.parts())));
}

/// Solve sum_alpha c_alpha b_alpha = Gamma_lambda for every lambda at once:
/// Gauss-Jordan over rational functions on the matrix of coefficients of the
/// canonical minimal class elements in the norms. The coordinate of a central
/// element on Gamma_mu is its coefficient at T_{w_mu}, which is what makes
/// this square system express the change of basis.
std::map<Partition, HeckeElement> solve_gammas(int n, const std::map<Partition, HeckeElement>& norms) {
  const auto& parts = partitions_in_table_order(n);
  const size_t p = parts.size();
  std::vector<std::vector<RatXiFrac>> m(p, std::vector<RatXiFrac>(2 * p));
  for (size_t r = 0; r < p; ++r) {
    const Permutation w = canonical_coxeter(n, Composition(parts[r].parts()));
    for (size_t c = 0; c < p; ++c) m[r][c] = RatXiFrac(norms.at(parts[c]).coeff(w));
    m[r][p + r] = RatXiFrac(XiPoly(1));
  }
  for (size_t col = 0; col < p; ++col) {
    size_t piv = col;
    while (piv < p && m[piv][col].is_zero()) ++piv;
    if (piv == p) throw internal_error("gamma solve: singular transition matrix");
    std::swap(m[col], m[piv]);
    const RatXiFrac inv = RatXiFrac(XiPoly(1)) / m[col][col];
    for (size_t c = col; c < 2 * p; ++c) m[col][c] = m[col][c] * inv;
    for (size_t r = 0; r < p; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const RatXiFrac f = m[r][col];
      for (size_t c = col; c < 2 * p; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }

  // column j of the inverse gives Gamma_{parts[j]} = sum_i X[i][j] b_{parts[i]}
  std::map<Partition, HeckeElement> gammas;
  for (size_t j = 0; j < p; ++j) {
    std::map<Permutation, RatXiFrac, TermOrder> acc;
    for (size_t i = 0; i < p; ++i) {
      const RatXiFrac& f = m[i][p + j];
      if (f.is_zero()) continue;
      for (const auto& [w, c] : norms.at(parts[i]).terms()) {
        auto [it, inserted] = acc.emplace(w, f * RatXiFrac(c));
        if (!inserted) it->second = it->second + f * RatXiFrac(c);
      }
    }
    HeckeElement g(n);
    for (const auto& [w, f] : acc) {
      if (f.is_zero()) continue;
      g.add_term(w, f.to_poly().to_integer());  // throws unless in Z[xi]
    }
    gammas.emplace(parts[j], std::move(g));
  }

  // re-verify the characterizing properties of every class element
  for (const auto& lam : parts) {
    const HeckeElement& g = gammas.at(lam);
    for (const auto& mu : parts) {
      const XiPoly want = (mu == lam) ? XiPoly(1) : XiPoly();
      for (const auto& w : min_length_class_elements(n, mu))
        if (g.coeff(w) != want)
          throw internal_error("gamma solve: wrong coefficient at a minimal class element");
    }
    GroupAlgebraElement sp = specialize_zero(g);
    GroupAlgebraElement cls(n);
    for (const auto& w : conjugacy_class(n, lam)) cls.add_term(w, 1);
    if (!(sp == cls)) throw internal_error("gamma solve: specialization is not the class sum");
    if (!is_central(g)) throw internal_error("gamma solve: non-central result");
  }
  return gammas;
}

const CenterData& center_data(int n) {
  {
    std::lock_guard<std::mutex> lk(g_center_mu);
    auto it = g_center.find(n);
    if (it != g_center.end()) return it->second;
  }
  CenterData data;
  for (const auto& a : partitions_in_table_order(n)) data.norms.emplace(a, compute_norm_b(n, a));
  data.gammas = solve_gammas(n, data.norms);
  std::lock_guard<std::mutex> lk(g_center_mu);
  return g_center.emplace(n, std::move(data)).first->second;
}

}  // namespace

const HeckeElement& norm_b(int n, const Composition& alpha) {
  if (alpha.total() != n) throw std::invalid_argument("norm_b: composition size mismatch");
  return center_data(n).norms.at(Partition::sorted_from(alpha));
}

const HeckeElement& gamma(int n, const Partition& lam) {
  if (lam.total() != n) throw std::invalid_argument("gamma: partition size mismatch");
  return center_data(n).gammas.at(lam);
}

XiPoly gamma_coeff(const HeckeElement& h, const Partition& lam) {
  if (lam.total() != h.degree()) throw std::invalid_argument("gamma_coeff: size mismatch");
  if (!is_central(h)) throw std::invalid_argument("gamma_coeff: input is not central");
  return inner(h, basis_elt(canonical_coxeter(h.degree(), Composition(lam.parts()))));
}

XiPoly formula_coeff(int n, const Partition& alpha, const Partition& lam) {
  if (alpha.total() != n || lam.total() != n)
    throw std::invalid_argument("formula_coeff: size mismatch");
  const Int ch = perm_character(n, Composition(lam.parts()), alpha);
  const int shift = l_lambda(lam) - l_lambda(alpha);
  if (ch == 0) return XiPoly();
  if (shift < 0)
    throw internal_error("formula_coeff: nonzero character value with negative length shift");
  return XiPoly::xi(shift, ch);
}

CentralExpansion expand_norm(int n, const Partition& alpha, ExpandMethod method) {
  CentralExpansion out;
  out.n = n;
  out.alpha = alpha;
  const auto& parts = partitions_in_table_order(n);
  if (method == ExpandMethod::formula) {
    for (const auto& lam : parts) out.coeffs.emplace_back(lam, formula_coeff(n, alpha, lam));
  } else {
    const HeckeElement& b = norm_b(n, alpha);
    if (!is_central(b)) throw internal_error("expand_norm: norm is not central");
    for (const auto& lam : parts)
      out.coeffs.emplace_back(lam, b.coeff(canonical_coxeter(n, Composition(lam.parts()))));
  }
  return out;
}

std::vector<ProjectionEntry> project_norm_general(int n, const Partition& alpha,
                                                  const Composition& lam) {
  if (alpha.total() != n || lam.total() != n)
    throw std::invalid_argument("project_norm_general: size mismatch");
  std::vector<ProjectionEntry> out;
  Int den = class_size(alpha);
  for (int part : lam.parts()) den *= factorial(part);
  const Int num0 = factorial(n);
  for (const auto& theta : multipartitions_of(lam, alpha)) {
    const Int num = num0 * class_size_in_parabolic(lam, theta);
    if (num % den != 0) throw internal_error("project_norm_general: non-integer coefficient");
    Int z = num / den;
    if (z < 0) throw internal_error("project_norm_general: negative coefficient");
    HeckeElement nrm =
        relative_norm(lam, theta.derived_composition(), eta_multipartition(n, theta));
    out.push_back(ProjectionEntry{theta, std::move(z), std::move(nrm)});
  }
  return out;
}

namespace {

std::string poly_debug(const XiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) os << ",";
    os << p.coeff(i);
  }
  os << "]";
  return os.str();
}

std::string perm_debug(const Permutation& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) os << " ";
    os << w(i);
  }
  return os.str();
}

std::string comp_debug(const Composition& c) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c.part(i);
  }
  os << ")";
  return os.str();
}

/// All compositions of n refining lam: per part, every composition of that
/// part, concatenated at its offset.
std::vector<Composition> refinements_of(const Composition& lam) {
  std::vector<std::vector<int>> acc{{}};
  for (int p : lam.parts()) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : acc)
      for (const auto& c : compositions_of(p)) {
        auto t = prefix;
        t.insert(t.end(), c.parts().begin(), c.parts().end());
        next.push_back(std::move(t));
      }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& t : acc) out.emplace_back(std::move(t));
  return out;
}

}  // namespace

VerifyReport verify_main_theorem(int n) {
  VerifyReport report;
  report.n = n;
  const auto& parts = partitions_in_table_order(n);

  // b_alpha == sum over lambda of the closed-form coefficient times gamma
  for (const auto& alpha : parts) {
    const HeckeElement& lhs = norm_b(n, alpha);
    HeckeElement rhs(n);
    for (const auto& lam : parts) {
      const XiPoly f = formula_coeff(n, alpha, lam);
      // coefficient-level cross-check against the direct coordinate
      const XiPoly direct = lhs.coeff(canonical_coxeter(n, Composition(lam.parts())));
      ++report.checks_run;
      if (f != direct) {
        report.failures.push_back(
            {"coefficient", "alpha=" + comp_debug(alpha) + " lambda=" + comp_debug(lam) +
                                " expected=" + poly_debug(f) + " got=" + poly_debug(direct)});
      }
      if (!f.is_zero()) rhs += gamma(n, lam).scaled(f);
    }
    ++report.checks_run;
    if (!(lhs == rhs)) {
      // name the first offending permutation
      for (const auto& w : all_permutations(n)) {
        if (lhs.coeff(w) != rhs.coeff(w)) {
          report.failures.push_back(
              {"expansion", "alpha=" + comp_debug(alpha) + " perm=" + perm_debug(w) +
                                " expected=" + poly_debug(rhs.coeff(w)) +
                                " got=" + poly_debug(lhs.coeff(w))});
          break;
        }
      }
    }
  }

  // blockwise form: N_{S_lam,S_mu}(eta_mu) decomposes over all
  // lam-multipartitions with per-block character coefficients
  for (const auto& lam : compositions_of(n)) {
    for (const auto& mu : refinements_of(lam)) {
      const auto mu_blocks = split_by_blocks(lam, mu);
      HeckeElement lhs = relative_norm(lam, mu, eta(n, mu));
      HeckeElement rhs(n);
      for (const auto& theta : multipartitions_of_shape(lam)) {
        Int ch = 1;
        for (size_t i = 0; i < theta.blocks().size() && ch != 0; ++i)
          ch *= perm_character(lam.part(static_cast<int>(i)),
                               Composition(theta.blocks()[i].parts()),
                               Partition::sorted_from(mu_blocks[i]));
        if (ch == 0) continue;
        int shift = 0;
        for (const auto& blk : theta.blocks()) shift += l_lambda(blk);
        shift -= l_lambda(mu);
        if (shift < 0) {
          report.failures.push_back({"blockwise", "lambda=" + comp_debug(lam) +
                                                      " mu=" + comp_debug(mu) +
                                                      " negative length shift"});
          continue;
        }
        HeckeElement gpr = basis_elt(Permutation(n));
        int offset = 0;
        for (const auto& blk : theta.blocks()) {
          gpr = mul(gpr, embed_shifted(gamma(blk.total(), blk), offset, n));
          offset += blk.total();
        }
        rhs += gpr.scaled(XiPoly::xi(shift, ch));
      }
      ++report.checks_run;
      if (!(lhs == rhs)) {
        for (const auto& w : all_permutations(n)) {
          if (lhs.coeff(w) != rhs.coeff(w)) {
            report.failures.push_back(
                {"blockwise", "lambda=" + comp_debug(lam) + " mu=" + comp_debug(mu) +
                                  " perm=" + perm_debug(w) + " expected=" +
                                  poly_debug(rhs.coeff(w)) + " got=" + poly_debug(lhs.coeff(w))});
            break;
          }
        }
      }
    }
  }
  return report;
}

void clear_all_caches() {
  product_cache::clear();
  clear_symgroup_caches();
  clear_coset_caches();
  std::lock_guard<std::mutex> lk(g_center_mu);
  g_center.clear();
}

}  // namespace hecke

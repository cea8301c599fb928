#pragma once

#include "heckecenter/combin.hpp"
#include "heckecenter/hecke.hpp"

#include <string>
#include <vector>

namespace hecke {

/// Runtime switch between the OpenMP kernel and the serial reference for the
/// norm summation. Defaults to on when compiled with OpenMP.
namespace parallel {
void set_enabled(bool on);
bool enabled();
int max_threads();
void set_threads(int k);
}  // namespace parallel

/// Relative norm: the sum over the distinguished right coset representatives
/// d of S_sub in S_sup of T_{d^{-1}} h T_d. Requires sub to refine sup and h
/// to have the common degree |sup|.
HeckeElement relative_norm(const Composition& sup, const Composition& sub, const HeckeElement& h);

/// Serial reference implementation.
HeckeElement relative_norm_serial(const Composition& sup, const Composition& sub,
                                  const HeckeElement& h);

/// OpenMP kernel; identical results to the serial reference (the summands are
/// exact, so the merge order cannot matter).
HeckeElement relative_norm_parallel(const Composition& sup, const Composition& sub,
                                    const HeckeElement& h);

/// The Coxeter class element of H_lam: the norm of T_{w_lam} from the trivial
/// subgroup to S_{lam-1}, assembled as a product of disjoint per-component
/// blocks.
HeckeElement eta(int n, const Composition& lam);

/// eta for a multipartition: the product of per-block eta elements embedded
/// at their offsets.
HeckeElement eta_multipartition(int n, const Multipartition& theta);

/// Norm basis element b_alpha. Conjugate compositions give equal results, so
/// results are cached under the sorted partition.
const HeckeElement& norm_b(int n, const Composition& alpha);

/// Minimal (class element) basis member. Solved once per degree from the
/// norm basis and verified against its characterizing properties; cached.
const HeckeElement& gamma(int n, const Partition& lam);

/// Coordinate of h on gamma(lam): the coefficient of T_{w_lam}. Requires a
/// central input.
XiPoly gamma_coeff(const HeckeElement& h, const Partition& lam);

/// Closed-form coefficient of gamma(lam) in b_alpha:
/// perm_character(n, lam, alpha) * xi^{l_lam - l_alpha}.
XiPoly formula_coeff(int n, const Partition& alpha, const Partition& lam);

/// Partitions of n ordered as in the coefficient tables: by increasing
/// minimal class length, then lexicographically decreasing.
const std::vector<Partition>& partitions_in_table_order(int n);

/// Coefficients of b_alpha on the gamma basis, in table order with explicit
/// zeros.
struct CentralExpansion {
  int n = 0;
  Partition alpha;
  std::vector<std::pair<Partition, XiPoly>> coeffs;
};

enum class ExpandMethod { formula, direct };

CentralExpansion expand_norm(int n, const Partition& alpha, ExpandMethod method);

/// One summand of the projection of b_alpha onto H_lam.
struct ProjectionEntry {
  Multipartition theta;
  Int coefficient;     // nonnegative integer
  HeckeElement norm;   // N_{S_lam, S_theta}(eta_theta)
};

/// Decomposition of project(norm_b(alpha), lam) as a combination of norms up
/// to S_lam, one entry per lam-multipartition of alpha.
std::vector<ProjectionEntry> project_norm_general(int n, const Partition& alpha,
                                                  const Composition& lam);

struct VerifyFailure {
  std::string check;
  std::string detail;  // names the offending alpha/lambda/permutation and values
};

struct VerifyReport {
  int n = 0;
  int checks_run = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Exact verification at degree n: every b_alpha equals the closed-form
/// combination of class elements, and every norm of eta up a parabolic
/// decomposes blockwise the same way.
VerifyReport verify_main_theorem(int n);

/// Drop every memo (products, cosets, classes, norms, gammas).
void clear_all_caches();

}  // namespace hecke

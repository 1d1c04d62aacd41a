#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "tndg/contractions.hpp"
#include "tndg/dense_tensor.hpp"
#include "tndg/zeigen.hpp"

namespace tndg {

/// Singular vector tuple of a general tensor: critical point of
/// G(x) = <A, tau(x)> on the product of unit spheres, with value sigma.
struct SingularTuple {
  double sigma = 0.0;
  BlockVector blocks;
  double residual = 0.0;

  bool converged(double tol) const { return residual <= tol; }
};

/// G(x) = <A, tau(x)>.
double g_value(const DenseTensor& a, const BlockVector& x);

/// Riemannian gradient blocks r_i = c_i - sigma x_i with
/// c_i = contract_leave_slot(A, x, i); x is a tuple iff all blocks vanish.
BlockVector svt_residual(const DenseTensor& a, const BlockVector& x);

double svt_residual_norm(const DenseTensor& a, const BlockVector& x);

struct SvtSolveOptions {
  double tol = 1e-12;
  int maxit = 300;
};

/// Cyclic higher-order power iteration (block coordinate ascent on |G|) with
/// deterministic restarts when a contraction collapses to zero.
SingularTuple solve_svt_hopm(const DenseTensor& a, const BlockVector& x0,
                             const SvtSolveOptions& opts = {});

struct SvtMultistartOptions {
  int starts = 0;  // 0: auto = 50 * k * max n_i
  double tol = 1e-12;
  int maxit = 300;
  std::uint64_t seed = 0;
  double dedup_angle = 1e-6;
};

struct SvtMultistartResult {
  std::vector<SingularTuple> tuples;  // deduped, canonical signs, sigma desc
  int unconverged_starts = 0;
};

SvtMultistartResult solve_svt_multistart(const DenseTensor& a,
                                         const SvtMultistartOptions& opts = {});

/// Riemannian Hessian of G on the product of spheres in stacked per-block
/// tangent bases: diagonal blocks -sigma I, off-diagonal blocks
/// P_i^T (two-slot contraction) P_j. Exact at critical points.
Eigen::MatrixXd riem_hessian_svt(const DenseTensor& a, const BlockVector& x);

/// Nondegeneracy via the Hessian spectrum: min |eig| > tol * max(1, max |eig|).
CertificationReport certify_svt(const DenseTensor& a, const BlockVector& x,
                                const CertifyOptions& opts = {});

/// Deterministic sign-orbit representative: blocks 2..k then block 1 get a
/// positive leading significant coordinate; sigma absorbs the flips.
SingularTuple canonical_svt_tuple(SingularTuple t);

bool same_tuple(const SingularTuple& p, const SingularTuple& q, double angle_tol);

}  // namespace tndg

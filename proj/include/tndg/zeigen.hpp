#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "tndg/contractions.hpp"
#include "tndg/dense_tensor.hpp"

namespace tndg {

/// Z-eigenpair: A x^{k-1} = lambda x with unit x; residual is ||T(x)||.
struct ZEigenPair {
  double lambda = 0.0;
  Eigen::VectorXd x;
  double residual = 0.0;

  bool converged(double tol) const { return residual <= tol; }
};

enum class CertifyRoute { kJacobian, kHessian, kBoth };

/// Spectral diagnostics behind a nondegeneracy verdict. The Hessian data and
/// the agreement flag are meaningful only when |lambda| exceeds the tolerance;
/// zero-eigenvalue eigenvectors are judged by the Jacobian route alone.
struct CertificationReport {
  CertifyRoute route = CertifyRoute::kBoth;
  double jac_min_sv = 0.0;
  double jac_max_sv = 0.0;
  double hess_min_abs_eig = 0.0;
  double hess_max_abs_eig = 0.0;
  bool nondegenerate = false;
  double tol = 0.0;
  std::optional<bool> agreement;  // engaged only when lambda != 0
  bool jacobian_verdict = false;
  bool hessian_verdict = false;
  bool lambda_is_zero = false;
};

struct CertifyOptions {
  double residual_tol = 1e-8;  // gate: input must be a numerical eigenvector
  double cert_tol = 1e-8;      // spectral threshold, relative to max(1, scale)
};

/// T(x) = A x^{k-1} - <A, x^{otimes k}> x. Rejects x with | ||x|| - 1 | > 1e-8.
Eigen::VectorXd z_residual(const SymmetricTensor& a, const Eigen::VectorXd& x);

/// Z-eigenvalue functional lambda(x) = <A, x^{otimes k}> = x^T A x^{k-1}.
double z_lambda(const SymmetricTensor& a, const Eigen::VectorXd& x);

/// nabla T(x) = (k-1) A x^{k-2} - lambda I - k lambda x x^T, the symmetric
/// matrix from the nonsingularity criterion. It equals the Frechet derivative
/// of T exactly at eigenvectors; at a general unit x the two differ by
/// k x T(x)^T.
Eigen::MatrixXd z_jacobian(const SymmetricTensor& a, const Eigen::VectorXd& x);

/// n x (n-1) orthonormal basis of the tangent space at unit x, deterministic
/// Householder construction.
Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x);

/// Riemannian Hessian of S(x) = <A, x^{otimes k}> on the sphere, expressed in
/// the tangent_basis frame: P^T (k(k-1) A x^{k-2} - k lambda I) P. Exact as a
/// Hessian only at critical points; advisory elsewhere.
Eigen::MatrixXd riem_hessian_z(const SymmetricTensor& a, const Eigen::VectorXd& x);

struct ZSolveOptions {
  std::optional<double> shift;  // default: (k-1) * hs_norm(A)
  double tol = 1e-12;
  int maxit = 500;
};

/// Shifted symmetric higher-order power iteration with Newton polish.
/// Unconverged runs are reported through the residual field, not an exception.
ZEigenPair solve_z_power(const SymmetricTensor& a, const Eigen::VectorXd& x0,
                         const ZSolveOptions& opts = {});

struct ZMultistartOptions {
  int starts = 0;  // 0: auto = 50 * k * n
  double tol = 1e-12;
  int maxit = 500;
  std::uint64_t seed = 0;
  double dedup_angle = 1e-6;
};

struct ZMultistartResult {
  std::vector<ZEigenPair> pairs;  // deduped, canonical signs, sorted by lambda desc
  int unconverged_starts = 0;
};

/// Deterministic multistart over both ascent and descent shifts; dedups
/// eigen-lines with the sign conventions of the order parity.
ZMultistartResult solve_z_multistart(const SymmetricTensor& a, const ZMultistartOptions& opts = {});

/// Certify nondegeneracy of a numerical Z-eigenvector by the Jacobian route
/// (singular values of nabla T) and, when lambda != 0, the Riemannian Hessian
/// route; the final verdict comes from the Jacobian route.
CertificationReport certify_z(const SymmetricTensor& a, const Eigen::VectorXd& x,
                              const CertifyOptions& opts = {});

/// Sign-canonical representative: flip so the largest-magnitude entry is
/// positive; lambda follows the parity of k.
ZEigenPair canonical_z_pair(int k, ZEigenPair p);

/// True when (lambda,x) and (mu,y) name the same eigen-line (+-x identified,
/// lambda sign folded by parity for odd k).
bool same_eigen_line(int k, const ZEigenPair& p, const ZEigenPair& q, double angle_tol,
                     double lambda_tol);

}  // namespace tndg

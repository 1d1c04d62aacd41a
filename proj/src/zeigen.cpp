#include "tndg/zeigen.hpp"

#include <algorithm>
#include <cmath>

#include "tndg/random.hpp"

namespace tndg {

namespace {

void require_unit(const Eigen::VectorXd& x, double tol = 1e-8) {
  detail::require(std::abs(x.norm() - 1.0) <= tol, "vector must have unit norm");
}

double residual_norm(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  const Eigen::VectorXd ax = contract_all_but_one(a, x);
  const double lambda = x.dot(ax);
  return (ax - lambda * x).norm();
}

}  // namespace

double z_lambda(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  return x.dot(contract_all_but_one(a, x));
}

Eigen::VectorXd z_residual(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  require_unit(x);
  const Eigen::VectorXd ax = contract_all_but_one(a, x);
  return ax - x.dot(ax) * x;
}

Eigen::MatrixXd z_jacobian(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  require_unit(x);
  const int n = a.dim();
  const int k = a.order();
  const Eigen::MatrixXd ax2 = contract_all_but_two(a, x);
  const double lambda = x.dot(ax2 * x);
  return (k - 1) * ax2 - lambda * Eigen::MatrixXd::Identity(n, n) -
         (k * lambda) * (x * x.transpose());
}

Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  detail::require(x.norm() > 0.0, "tangent basis of the zero vector");
  const Eigen::VectorXd u = x / x.norm();
  // Householder reflector sending u to -s e1; trailing columns span u-perp.
  const double s = u[0] >= 0.0 ? 1.0 : -1.0;
  Eigen::VectorXd v = u;
  v[0] += s;
  const double beta = 2.0 / v.squaredNorm();
  Eigen::MatrixXd p(n, n - 1);
  for (int j = 1; j < n; ++j) {
    p.col(j - 1) = -beta * v[j] * v;
    p(j, j - 1) += 1.0;
  }
  return p;
}

Eigen::MatrixXd riem_hessian_z(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  require_unit(x);
  const int n = a.dim();
  const int k = a.order();
  const Eigen::MatrixXd ax2 = contract_all_but_two(a, x);
  const double lambda = x.dot(ax2 * x);
  const Eigen::MatrixXd p = tangent_basis(x);
  const Eigen::MatrixXd core =
      static_cast<double>(k) * (k - 1) * ax2 - (k * lambda) * Eigen::MatrixXd::Identity(n, n);
  return p.transpose() * core * p;
}

namespace {

// Newton step for F(x, lambda) = [A x^{k-1} - lambda x; (x^T x - 1)/2].
// Returns false when the bordered system is numerically singular.
bool newton_step(const SymmetricTensor& a, Eigen::VectorXd& x, double& lambda) {
  const int n = a.dim();
  const int k = a.order();
  const Eigen::MatrixXd ax2 = contract_all_but_two(a, x);
  const Eigen::VectorXd ax = ax2 * x;

  Eigen::MatrixXd jac(n + 1, n + 1);
  jac.topLeftCorner(n, n) = (k - 1) * ax2 - lambda * Eigen::MatrixXd::Identity(n, n);
  jac.topRightCorner(n, 1) = -x;
  jac.bottomLeftCorner(1, n) = x.transpose();
  jac(n, n) = 0.0;

  Eigen::VectorXd rhs(n + 1);
  rhs.head(n) = -(ax - lambda * x);
  rhs(n) = -0.5 * (x.squaredNorm() - 1.0);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd delta = lu.solve(rhs);
  x += delta.head(n);
  const double nrm = x.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) return false;
  x /= nrm;
  lambda += delta(n);
  return true;
}

}  // namespace

ZEigenPair solve_z_power(const SymmetricTensor& a, const Eigen::VectorXd& x0,
                         const ZSolveOptions& opts) {
  detail::require(opts.tol > 0.0, "tolerance must be positive");
  detail::require(static_cast<int>(x0.size()) == a.dim(), "start vector dimension mismatch");
  const int k = a.order();
  const double alpha = opts.shift.value_or((k - 1) * hs_norm(a));

  Eigen::VectorXd x = x0;
  const double nrm0 = x.norm();
  detail::require(nrm0 > 0.0, "start vector must be nonzero");
  x /= nrm0;

  ZEigenPair best;
  best.x = x;
  best.lambda = z_lambda(a, x);
  best.residual = residual_norm(a, x);
  if (best.residual <= opts.tol) return best;

  const double polish_gate = std::max(opts.tol, 1e-6);
  for (int it = 0; it < opts.maxit; ++it) {
    const Eigen::VectorXd ax = contract_all_but_one(a, x);
    Eigen::VectorXd next = ax + alpha * x;
    const double nrm = next.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
    x = next / nrm;

    const Eigen::VectorXd ax_new = contract_all_but_one(a, x);
    double lambda = x.dot(ax_new);
    double res = (ax_new - lambda * x).norm();

    if (res <= polish_gate) {
      Eigen::VectorXd xp = x;
      double lp = lambda;
      for (int s = 0; s < 8 && res > opts.tol; ++s) {
        if (!newton_step(a, xp, lp)) break;
        const double rp = residual_norm(a, xp);
        if (!(rp < res)) break;
        x = xp;
        lambda = z_lambda(a, x);
        res = rp;
      }
    }

    if (res < best.residual) {
      best.x = x;
      best.lambda = lambda;
      best.residual = res;
    }
    if (best.residual <= opts.tol) break;
  }
  return best;
}

bool same_eigen_line(int k, const ZEigenPair& p, const ZEigenPair& q, double angle_tol,
                     double lambda_tol) {
  const double dot = p.x.dot(q.x);
  if (std::acos(std::clamp(std::abs(dot), 0.0, 1.0)) > angle_tol) return false;
  const double sign = dot >= 0.0 ? 1.0 : -1.0;
  const double q_lambda_in_p_frame = (k % 2 == 0) ? q.lambda : sign * q.lambda;
  return std::abs(p.lambda - q_lambda_in_p_frame) <= lambda_tol;
}

ZEigenPair canonical_z_pair(int k, ZEigenPair p) {
  int imax = 0;
  p.x.cwiseAbs().maxCoeff(&imax);
  if (p.x[imax] < 0.0) {
    p.x = -p.x;
    if (k % 2 != 0) p.lambda = -p.lambda;
  }
  return p;
}

ZMultistartResult solve_z_multistart(const SymmetricTensor& a, const ZMultistartOptions& opts) {
  const int n = a.dim();
  const int k = a.order();
  const int starts = opts.starts > 0 ? opts.starts : 50 * k * n;

  ZSolveOptions solve_opts;
  solve_opts.tol = opts.tol;
  solve_opts.maxit = opts.maxit;
  const double alpha = (k - 1) * hs_norm(a);

  // Local maxima come from the ascent iteration on A; for even k the minima
  // form separate eigen-lines and need the descent run (ascent on -A).
  const SymmetricTensor neg = [&] {
    DenseTensor nd = a.dense();
    nd *= -1.0;
    return SymmetricTensor(std::move(nd), SymmetryPolicy::kVerify, 0.0);
  }();

  ZMultistartResult out;
  const double lambda_tol = 1e-6 * std::max(1.0, hs_norm(a));
  for (int s = 0; s < starts; ++s) {
    GaussianStream g(derive_seed(opts.seed, static_cast<std::uint64_t>(s)));
    const Eigen::VectorXd x0 = g.unit_vector(n);

    std::vector<ZEigenPair> found;
    ZSolveOptions up = solve_opts;
    up.shift = alpha;
    found.push_back(solve_z_power(a, x0, up));
    if (k % 2 == 0) {
      ZEigenPair down = solve_z_power(neg, x0, up);
      down.lambda = -down.lambda;
      found.push_back(down);
    }

    for (ZEigenPair& pair : found) {
      if (!pair.converged(opts.tol)) {
        ++out.unconverged_starts;
        continue;
      }
      pair = canonical_z_pair(k, pair);
      bool merged = false;
      for (ZEigenPair& kept : out.pairs) {
        if (same_eigen_line(k, kept, pair, opts.dedup_angle, lambda_tol)) {
          if (pair.residual < kept.residual) kept = pair;
          merged = true;
          break;
        }
      }
      if (!merged) out.pairs.push_back(pair);
    }
  }

  std::sort(out.pairs.begin(), out.pairs.end(), [](const ZEigenPair& l, const ZEigenPair& r) {
    if (l.lambda != r.lambda) return l.lambda > r.lambda;
    return std::lexicographical_compare(r.x.data(), r.x.data() + r.x.size(), l.x.data(),
                                        l.x.data() + l.x.size());
  });
  return out;
}

CertificationReport certify_z(const SymmetricTensor& a, const Eigen::VectorXd& x,
                              const CertifyOptions& opts) {
  require_unit(x);
  const double res = residual_norm(a, x);
  detail::require(res <= opts.residual_tol,
                  "certify_z: residual exceeds tolerance, not a numerical eigenvector");

  CertificationReport rep;
  rep.tol = opts.cert_tol;
  const double lambda = z_lambda(a, x);
  rep.lambda_is_zero = std::abs(lambda) <= opts.cert_tol;

  const Eigen::MatrixXd jac = z_jacobian(a, x);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  rep.jac_min_sv = svd.singularValues().minCoeff();
  rep.jac_max_sv = svd.singularValues().maxCoeff();
  rep.jacobian_verdict = rep.jac_min_sv > opts.cert_tol * std::max(1.0, rep.jac_max_sv);

  const Eigen::MatrixXd hess = riem_hessian_z(a, x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd abs_eigs = es.eigenvalues().cwiseAbs();
  rep.hess_min_abs_eig = abs_eigs.minCoeff();
  rep.hess_max_abs_eig = abs_eigs.maxCoeff();
  rep.hessian_verdict = rep.hess_min_abs_eig > opts.cert_tol * std::max(1.0, rep.hess_max_abs_eig);

  rep.nondegenerate = rep.jacobian_verdict;
  if (!rep.lambda_is_zero) {
    rep.route = CertifyRoute::kBoth;
    rep.agreement = (rep.jacobian_verdict == rep.hessian_verdict);
  } else {
    rep.route = CertifyRoute::kJacobian;
  }
  return rep;
}

}  // namespace tndg

#include "tndg/svt.hpp"

#include <algorithm>
#include <cmath>

#include "tndg/random.hpp"

namespace tndg {

namespace {

void require_joint_sphere(const BlockVector& x) {
  detail::require(x.on_joint_sphere(1e-8), "block vector must lie on the joint sphere");
}

int leading_significant(const Eigen::VectorXd& v, double floor = 1e-8) {
  for (int j = 0; j < v.size(); ++j) {
    if (std::abs(v[j]) > floor) return j;
  }
  return -1;
}

}  // namespace

double g_value(const DenseTensor& a, const BlockVector& x) {
  require_joint_sphere(x);
  const Eigen::VectorXd c0 = contract_leave_slot(a, x, 0);
  return x.blocks[0].dot(c0);
}

BlockVector svt_residual(const DenseTensor& a, const BlockVector& x) {
  require_joint_sphere(x);
  const int k = a.order();
  const double sigma = g_value(a, x);
  BlockVector r;
  r.blocks.reserve(k);
  for (int i = 0; i < k; ++i) {
    const Eigen::VectorXd ci = contract_leave_slot(a, x, i);
    r.blocks.push_back(ci - sigma * x.blocks[i]);
  }
  return r;
}

double svt_residual_norm(const DenseTensor& a, const BlockVector& x) {
  const BlockVector r = svt_residual(a, x);
  double s = 0.0;
  for (const auto& b : r.blocks) s += b.squaredNorm();
  return std::sqrt(s);
}

SingularTuple solve_svt_hopm(const DenseTensor& a, const BlockVector& x0,
                             const SvtSolveOptions& opts) {
  detail::require(opts.tol > 0.0, "tolerance must be positive");
  const int k = a.order();

  SingularTuple best;
  best.blocks = x0;
  best.blocks.normalize_blocks();
  best.sigma = g_value(a, best.blocks);
  best.residual = svt_residual_norm(a, best.blocks);
  if (best.residual <= opts.tol) return best;

  BlockVector x = best.blocks;
  int zero_restarts = 0;
  for (int sweep = 0; sweep < opts.maxit; ++sweep) {
    for (int i = 0; i < k; ++i) {
      Eigen::VectorXd ci = contract_leave_slot(a, x, i);
      const double nrm = ci.norm();
      if (nrm <= 1e-300) {
        if (++zero_restarts > 3) return best;  // unconverged, flagged via residual
        // Deterministic kick: rotate toward a cycling coordinate axis.
        Eigen::VectorXd kick = x.blocks[i];
        kick[(sweep + zero_restarts) % kick.size()] += 0.5;
        x.blocks[i] = kick / kick.norm();
        continue;
      }
      x.blocks[i] = ci / nrm;
    }
    const double res = svt_residual_norm(a, x);
    if (res < best.residual) {
      best.blocks = x;
      best.sigma = g_value(a, x);
      best.residual = res;
    }
    if (best.residual <= opts.tol) break;
  }
  return best;
}

Eigen::MatrixXd riem_hessian_svt(const DenseTensor& a, const BlockVector& x) {
  require_joint_sphere(x);
  const int k = a.order();
  const double sigma = g_value(a, x);

  std::vector<Eigen::MatrixXd> bases(k);
  std::vector<int> offsets(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    bases[i] = tangent_basis(x.blocks[i]);
    offsets[i + 1] = offsets[i] + static_cast<int>(bases[i].cols());
  }
  const int m = offsets[k];

  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < k; ++i) {
    const int di = static_cast<int>(bases[i].cols());
    hess.block(offsets[i], offsets[i], di, di) =
        -sigma * Eigen::MatrixXd::Identity(di, di);
    for (int j = i + 1; j < k; ++j) {
      const int dj = static_cast<int>(bases[j].cols());
      const Eigen::MatrixXd cij = contract_leave_two_slots(a, x, i, j);
      const Eigen::MatrixXd blk = bases[i].transpose() * cij * bases[j];
      hess.block(offsets[i], offsets[j], di, dj) = blk;
      hess.block(offsets[j], offsets[i], dj, di) = blk.transpose();
    }
  }
  return hess;
}

CertificationReport certify_svt(const DenseTensor& a, const BlockVector& x,
                                const CertifyOptions& opts) {
  const double res = svt_residual_norm(a, x);
  detail::require(res <= opts.residual_tol,
                  "certify_svt: residual exceeds tolerance, not a numerical tuple");

  CertificationReport rep;
  rep.route = CertifyRoute::kHessian;
  rep.tol = opts.cert_tol;

  const Eigen::MatrixXd hess = riem_hessian_svt(a, x);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd abs_eigs = es.eigenvalues().cwiseAbs();
  rep.hess_min_abs_eig = abs_eigs.minCoeff();
  rep.hess_max_abs_eig = abs_eigs.maxCoeff();
  rep.hessian_verdict = rep.hess_min_abs_eig > opts.cert_tol * std::max(1.0, rep.hess_max_abs_eig);
  rep.nondegenerate = rep.hessian_verdict;
  rep.lambda_is_zero = std::abs(g_value(a, x)) <= opts.cert_tol;
  return rep;
}

SingularTuple canonical_svt_tuple(SingularTuple t) {
  const int k = t.blocks.count();
  double flip = 1.0;
  for (int i = 0; i < k; ++i) {
    const int lead = leading_significant(t.blocks.blocks[i]);
    if (lead >= 0 && t.blocks.blocks[i][lead] < 0.0) {
      t.blocks.blocks[i] *= -1.0;
      flip *= -1.0;
    }
  }
  t.sigma *= flip;
  return t;
}

bool same_tuple(const SingularTuple& p, const SingularTuple& q, double angle_tol) {
  if (p.blocks.count() != q.blocks.count()) return false;
  for (int i = 0; i < p.blocks.count(); ++i) {
    const double dot = p.blocks.blocks[i].dot(q.blocks.blocks[i]);
    if (std::acos(std::clamp(dot, -1.0, 1.0)) > angle_tol) return false;
  }
  return true;
}

SvtMultistartResult solve_svt_multistart(const DenseTensor& a,
                                         const SvtMultistartOptions& opts) {
  const int k = a.order();
  const int max_n = *std::max_element(a.dims().begin(), a.dims().end());
  const int starts = opts.starts > 0 ? opts.starts : 50 * k * max_n;

  SvtSolveOptions solve_opts;
  solve_opts.tol = opts.tol;
  solve_opts.maxit = opts.maxit;

  SvtMultistartResult out;
  for (int s = 0; s < starts; ++s) {
    GaussianStream g(derive_seed(opts.seed, static_cast<std::uint64_t>(s)));
    BlockVector x0;
    x0.blocks.reserve(k);
    for (int i = 0; i < k; ++i) x0.blocks.push_back(g.unit_vector(a.dims()[i]));

    SingularTuple t = solve_svt_hopm(a, x0, solve_opts);
    if (!t.converged(opts.tol)) {
      ++out.unconverged_starts;
      continue;
    }
    t = canonical_svt_tuple(t);
    bool merged = false;
    for (SingularTuple& kept : out.tuples) {
      if (same_tuple(kept, t, opts.dedup_angle)) {
        if (t.residual < kept.residual) kept = t;
        merged = true;
        break;
      }
    }
    if (!merged) out.tuples.push_back(t);
  }

  std::sort(out.tuples.begin(), out.tuples.end(),
            [](const SingularTuple& l, const SingularTuple& r) {
              if (l.sigma != r.sigma) return l.sigma > r.sigma;
              return l.residual < r.residual;
            });
  return out;
}

}  // namespace tndg

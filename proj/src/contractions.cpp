#include "tndg/contractions.hpp"

#include <algorithm>
#include <cmath>

namespace tndg {

namespace {

using Cplx = std::complex<double>;

// Contract the trailing modes [keep, k) of a cubical tensor with x, leaving
// the first `keep` modes.
template <typename Scalar>
std::vector<Scalar> reduce_trailing(const std::vector<Scalar>& entries,
                                    const std::vector<int>& dims, int keep,
                                    const Scalar* x) {
  std::vector<Scalar> buf = entries;
  std::vector<int> cur = dims;
  while (static_cast<int>(cur.size()) > keep) {
    buf = detail::contract_mode(buf, cur, static_cast<int>(cur.size()) - 1, x);
  }
  return buf;
}

void require_vector_dim(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  detail::require(static_cast<int>(x.size()) == a.dim(), "vector length does not match tensor dimension");
}

std::vector<Cplx> to_complex(const std::vector<double>& v) {
  return std::vector<Cplx>(v.begin(), v.end());
}

}  // namespace

Eigen::VectorXd contract_all_but_one(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  require_vector_dim(a, x);
  const auto buf = reduce_trailing(a.dense().data(), a.dense().dims(), 1, x.data());
  return Eigen::Map<const Eigen::VectorXd>(buf.data(), a.dim());
}

Eigen::MatrixXd contract_all_but_two(const SymmetricTensor& a, const Eigen::VectorXd& x) {
  require_vector_dim(a, x);
  const auto buf = reduce_trailing(a.dense().data(), a.dense().dims(), 2, x.data());
  const int n = a.dim();
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      buf.data(), n, n);
}

Eigen::VectorXcd contract_all_but_one_c(const DenseTensor& a, const Eigen::VectorXcd& x) {
  detail::require(a.is_cubical(), "complex contraction requires equal dims");
  const int n = a.dims()[0];
  detail::require(static_cast<int>(x.size()) == n, "vector length does not match tensor dimension");
  const auto buf = reduce_trailing(to_complex(a.data()), a.dims(), 1, x.data());
  return Eigen::Map<const Eigen::VectorXcd>(buf.data(), n);
}

Eigen::MatrixXcd contract_all_but_two_c(const DenseTensor& a, const Eigen::VectorXcd& x) {
  detail::require(a.is_cubical(), "complex contraction requires equal dims");
  const int n = a.dims()[0];
  detail::require(static_cast<int>(x.size()) == n, "vector length does not match tensor dimension");
  const auto buf = reduce_trailing(to_complex(a.data()), a.dims(), 2, x.data());
  return Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      buf.data(), n, n);
}

namespace {

void require_block_match(const DenseTensor& a, const BlockVector& x) {
  detail::require(x.count() == a.order(), "block count does not match tensor order");
  for (int i = 0; i < a.order(); ++i) {
    detail::require(static_cast<int>(x.blocks[i].size()) == a.dims()[i],
                    "block length does not match mode dimension");
  }
}

// Contract all modes except those in `kept` (sorted ascending), descending
// original-mode order; the position of mode j equals the count of remaining
// modes with smaller original index.
std::vector<double> reduce_except(const DenseTensor& a, const BlockVector& x,
                                  const std::vector<int>& kept, std::vector<int>& out_dims) {
  std::vector<double> buf = a.data();
  std::vector<int> cur = a.dims();
  std::vector<int> remaining(a.order());
  for (int j = 0; j < a.order(); ++j) remaining[j] = j;

  for (int j = a.order() - 1; j >= 0; --j) {
    if (std::binary_search(kept.begin(), kept.end(), j)) continue;
    const auto it = std::find(remaining.begin(), remaining.end(), j);
    const int pos = static_cast<int>(it - remaining.begin());
    buf = detail::contract_mode(buf, cur, pos, x.blocks[j].data());
    remaining.erase(it);
  }
  out_dims = cur;
  return buf;
}

}  // namespace

Eigen::VectorXd contract_leave_slot(const DenseTensor& a, const BlockVector& x, int slot) {
  require_block_match(a, x);
  detail::require(slot >= 0 && slot < a.order(), "slot out of range");
  std::vector<int> out_dims;
  const auto buf = reduce_except(a, x, {slot}, out_dims);
  return Eigen::Map<const Eigen::VectorXd>(buf.data(), out_dims[0]);
}

Eigen::MatrixXd contract_leave_two_slots(const DenseTensor& a, const BlockVector& x,
                                         int slot_i, int slot_j) {
  require_block_match(a, x);
  detail::require(slot_i != slot_j, "slots must differ");
  detail::require(slot_i >= 0 && slot_i < a.order() && slot_j >= 0 && slot_j < a.order(),
                  "slot out of range");
  const int lo = std::min(slot_i, slot_j), hi = std::max(slot_i, slot_j);
  std::vector<int> out_dims;
  const auto buf = reduce_except(a, x, {lo, hi}, out_dims);
  const auto mat =
      Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
          buf.data(), out_dims[0], out_dims[1]);
  // Buffer keeps original mode order (lo rows); transpose if rows should be slot_i = hi.
  if (slot_i == lo) return mat;
  return mat.transpose();
}

double inner(const DenseTensor& a, const DenseTensor& b) {
  detail::require(a.same_dims(b), "inner product requires identical dims");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

double hs_norm(const DenseTensor& a) {
  return std::sqrt(inner(a, a));
}

SymmetricTensor veronese(const Eigen::VectorXd& x, int k) {
  detail::require(k >= 3, "veronese requires order k >= 3");
  const int n = static_cast<int>(x.size());
  detail::require(n >= 1, "empty vector");
  DenseTensor t = DenseTensor::zeros(std::vector<int>(k, n));
  std::vector<int> idx;
  auto& e = t.data();
  for (std::size_t lin = 0; lin < e.size(); ++lin) {
    detail::decode_index(lin, t.dims(), idx);
    std::sort(idx.begin(), idx.end());
    double p = 1.0;
    for (int m = 0; m < k; ++m) p *= x[idx[m]];
    e[lin] = p;
  }
  return SymmetricTensor(std::move(t), SymmetryPolicy::kVerify, 0.0);
}

DenseTensor segre(const BlockVector& x) {
  detail::require(x.count() >= 3, "segre requires at least 3 blocks");
  DenseTensor t = DenseTensor::zeros(x.dims());
  std::vector<int> idx;
  auto& e = t.data();
  for (std::size_t lin = 0; lin < e.size(); ++lin) {
    detail::decode_index(lin, t.dims(), idx);
    double p = 1.0;
    for (int m = 0; m < x.count(); ++m) p *= x.blocks[m][idx[m]];
    e[lin] = p;
  }
  return t;
}

namespace {

// Mode-m product with a square matrix: out[..., i, ...] = sum_j u(i,j) buf[..., j, ...].
std::vector<double> apply_mode_matrix(const std::vector<double>& buf,
                                      const std::vector<int>& dims, int pos,
                                      const Eigen::MatrixXd& u) {
  const int m = static_cast<int>(dims.size());
  std::size_t outer = 1, inner = 1;
  for (int q = 0; q < pos; ++q) outer *= static_cast<std::size_t>(dims[q]);
  for (int q = pos + 1; q < m; ++q) inner *= static_cast<std::size_t>(dims[q]);
  const auto len = static_cast<std::size_t>(dims[pos]);

  std::vector<double> out(buf.size(), 0.0);
  for (std::size_t o = 0; o < outer; ++o) {
    const double* src = buf.data() + o * len * inner;
    double* dst = out.data() + o * len * inner;
    for (std::size_t i = 0; i < len; ++i) {
      double* row = dst + i * inner;
      for (std::size_t j = 0; j < len; ++j) {
        const double uij = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        const double* srow = src + j * inner;
        for (std::size_t in = 0; in < inner; ++in) row[in] += uij * srow[in];
      }
    }
  }
  return out;
}

}  // namespace

SymmetricTensor orth_act(const OrthogonalMatrix& u, const SymmetricTensor& a) {
  detail::require(u.dim() == a.dim(), "orthogonal matrix dimension mismatch");
  std::vector<double> buf = a.dense().data();
  for (int m = 0; m < a.order(); ++m) {
    buf = apply_mode_matrix(buf, a.dense().dims(), m, u.values());
  }
  DenseTensor t(a.dense().dims(), std::move(buf));
  // The exact result is symmetric; sequential mode products leave roundoff
  // asymmetry, so canonicalize by averaging rather than verifying.
  return SymmetricTensor(std::move(t), SymmetryPolicy::kSymmetrize);
}

SymmetricTensor symmetrize(const DenseTensor& a) {
  return SymmetricTensor(a, SymmetryPolicy::kSymmetrize);
}

}  // namespace tndg

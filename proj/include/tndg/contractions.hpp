#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "tndg/dense_tensor.hpp"

namespace tndg {

/// A x^{k-1}: contract x into every mode but the first. Entry i is
/// sum_{i2..ik} a_{i i2..ik} x_{i2} ... x_{ik}.
Eigen::VectorXd contract_all_but_one(const SymmetricTensor& a, const Eigen::VectorXd& x);

/// A x^{k-2}: contract x into every mode but the first two; symmetric matrix
/// for symmetric A. Entry (i,j) is sum a_{i j i3..ik} x_{i3} ... x_{ik}.
Eigen::MatrixXd contract_all_but_two(const SymmetricTensor& a, const Eigen::VectorXd& x);

/// Complex variants used by the H-eigen machinery (A stays real).
Eigen::VectorXcd contract_all_but_one_c(const DenseTensor& a, const Eigen::VectorXcd& x);
Eigen::MatrixXcd contract_all_but_two_c(const DenseTensor& a, const Eigen::VectorXcd& x);

/// Contract block j of x into every mode j != slot (0-based). Length n_slot.
Eigen::VectorXd contract_leave_slot(const DenseTensor& a, const BlockVector& x, int slot);

/// Contract every block except slots i and j (i != j); rows indexed by slot i,
/// columns by slot j.
Eigen::MatrixXd contract_leave_two_slots(const DenseTensor& a, const BlockVector& x,
                                         int slot_i, int slot_j);

double inner(const DenseTensor& a, const DenseTensor& b);
double hs_norm(const DenseTensor& a);
inline double hs_norm(const SymmetricTensor& a) { return hs_norm(a.dense()); }

/// Veronese embedding x^{otimes k}. Entries are computed on the sorted
/// multi-index so the result is permutation-symmetric exactly.
SymmetricTensor veronese(const Eigen::VectorXd& x, int k);

/// Segre embedding tau(x) = x_1 otimes ... otimes x_k.
DenseTensor segre(const BlockVector& x);

/// Orthogonal group action (U . A)_{i1..ik} = sum u_{i1 j1}...u_{ik jk} a_{j1..jk};
/// preserves symmetry and the Hilbert-Schmidt norm.
SymmetricTensor orth_act(const OrthogonalMatrix& u, const SymmetricTensor& a);

/// symmetrize as an operation on cubical dense tensors (see symmetrize_dense).
SymmetricTensor symmetrize(const DenseTensor& a);

namespace detail {

/// Contract mode `pos` of a row-major buffer with vector v, removing that mode.
template <typename Scalar, typename VScalar>
std::vector<Scalar> contract_mode(const std::vector<Scalar>& buf, std::vector<int>& dims,
                                  int pos, const VScalar* v) {
  const int m = static_cast<int>(dims.size());
  std::size_t outer = 1, inner = 1;
  for (int q = 0; q < pos; ++q) outer *= static_cast<std::size_t>(dims[q]);
  for (int q = pos + 1; q < m; ++q) inner *= static_cast<std::size_t>(dims[q]);
  const auto len = static_cast<std::size_t>(dims[pos]);

  std::vector<Scalar> out(outer * inner, Scalar(0));
  for (std::size_t o = 0; o < outer; ++o) {
    const Scalar* base = buf.data() + o * len * inner;
    Scalar* dst = out.data() + o * inner;
    for (std::size_t j = 0; j < len; ++j) {
      const Scalar* row = base + j * inner;
      const VScalar vj = v[j];
      for (std::size_t in = 0; in < inner; ++in) dst[in] += row[in] * vj;
    }
  }
  dims.erase(dims.begin() + pos);
  return out;
}

}  // namespace detail

}  // namespace tndg

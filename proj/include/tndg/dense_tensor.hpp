#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tndg {

/// Dense order-k real tensor, row-major storage (last index fastest).
/// Order is at least 3; matrices and vectors are handled by Eigen directly.
class DenseTensor {
 public:
  DenseTensor(std::vector<int> dims, std::vector<double> entries);

  static DenseTensor zeros(std::vector<int> dims);

  int order() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return entries_.size(); }

  const std::vector<double>& data() const { return entries_; }
  std::vector<double>& data() { return entries_; }

  double at(const std::vector<int>& idx) const { return entries_[linear_index(idx)]; }
  double& at(const std::vector<int>& idx) { return entries_[linear_index(idx)]; }

  /// Row-major linear index, last index fastest.
  std::size_t linear_index(const std::vector<int>& idx) const;

  bool same_dims(const DenseTensor& other) const { return dims_ == other.dims_; }

  /// All dims equal (cubical shape), required for symmetric machinery.
  bool is_cubical() const;

  DenseTensor& operator+=(const DenseTensor& other);
  DenseTensor& operator*=(double s);

 private:
  std::vector<int> dims_;
  std::vector<double> entries_;
};

DenseTensor operator+(DenseTensor a, const DenseTensor& b);
DenseTensor operator*(double s, DenseTensor a);

/// Max deviation of any entry from the value at its sorted (canonical) multi-index.
/// Zero exactly iff the tensor is permutation-symmetric.
double symmetry_deviation(const DenseTensor& t);

/// Average over all k! index permutations. Exactly idempotent: orbits whose
/// entries are already bitwise equal are passed through unchanged.
DenseTensor symmetrize_dense(const DenseTensor& t);

enum class SymmetryPolicy {
  kVerify,      // reject if asymmetry exceeds tolerance, then canonicalize
  kSymmetrize,  // average over the permutation orbit
};

/// Order-k symmetric tensor over R^n. Construction either verifies symmetry
/// (within an absolute tolerance) or symmetrizes; both paths canonicalize so
/// that entries are invariant under index permutations exactly.
class SymmetricTensor {
 public:
  SymmetricTensor(DenseTensor base, SymmetryPolicy policy, double tol = 1e-12);

  int order() const { return base_.order(); }
  int dim() const { return base_.dims()[0]; }
  const DenseTensor& dense() const { return base_; }

 private:
  DenseTensor base_;
};

/// Block vector x = (x_1, ..., x_k), one block per tensor mode.
struct BlockVector {
  std::vector<Eigen::VectorXd> blocks;

  int count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> dims() const;

  /// Every block unit-norm within tol.
  bool on_joint_sphere(double tol = 1e-12) const;
  void normalize_blocks();
};

/// n x n real matrix with U^T U = I within an entrywise tolerance.
class OrthogonalMatrix {
 public:
  explicit OrthogonalMatrix(Eigen::MatrixXd values, double tol = 1e-12);

  int dim() const { return static_cast<int>(values_.rows()); }
  const Eigen::MatrixXd& values() const { return values_; }

 private:
  Eigen::MatrixXd values_;
};

namespace detail {

/// Decode a row-major linear index (last index fastest) into digits.
void decode_index(std::size_t linear, const std::vector<int>& dims, std::vector<int>& idx);

/// Linear index of the sorted permutation of idx (valid for cubical tensors).
std::size_t sorted_linear_index(const std::vector<int>& dims, std::vector<int> idx);

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

}  // namespace tndg

#include "tndg/dense_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tndg {

namespace {

std::size_t checked_entry_count(const std::vector<int>& dims) {
  detail::require(dims.size() >= 3, "tensor order must be at least 3");
  std::size_t n = 1;
  for (int d : dims) {
    detail::require(d >= 1, "tensor dimensions must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

}  // namespace

DenseTensor::DenseTensor(std::vector<int> dims, std::vector<double> entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  const std::size_t expect = checked_entry_count(dims_);
  detail::require(entries_.size() == expect,
                  "entry count does not match the product of dims");
  for (double v : entries_) {
    detail::require(std::isfinite(v), "tensor entries must be finite");
  }
}

DenseTensor DenseTensor::zeros(std::vector<int> dims) {
  const std::size_t n = checked_entry_count(dims);
  return DenseTensor(std::move(dims), std::vector<double>(n, 0.0));
}

std::size_t DenseTensor::linear_index(const std::vector<int>& idx) const {
  detail::require(idx.size() == dims_.size(), "multi-index order mismatch");
  std::size_t lin = 0;
  for (std::size_t m = 0; m < dims_.size(); ++m) {
    detail::require(idx[m] >= 0 && idx[m] < dims_[m], "multi-index out of range");
    lin = lin * static_cast<std::size_t>(dims_[m]) + static_cast<std::size_t>(idx[m]);
  }
  return lin;
}

bool DenseTensor::is_cubical() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_[0]; });
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& other) {
  detail::require(same_dims(other), "tensor dims mismatch in addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(double s) {
  for (double& v : entries_) v *= s;
  return *this;
}

DenseTensor operator+(DenseTensor a, const DenseTensor& b) {
  a += b;
  return a;
}

DenseTensor operator*(double s, DenseTensor a) {
  a *= s;
  return a;
}

namespace detail {

void decode_index(std::size_t linear, const std::vector<int>& dims, std::vector<int>& idx) {
  idx.resize(dims.size());
  for (std::size_t m = dims.size(); m-- > 0;) {
    const auto d = static_cast<std::size_t>(dims[m]);
    idx[m] = static_cast<int>(linear % d);
    linear /= d;
  }
}

std::size_t sorted_linear_index(const std::vector<int>& dims, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  std::size_t lin = 0;
  for (std::size_t m = 0; m < dims.size(); ++m) {
    lin = lin * static_cast<std::size_t>(dims[m]) + static_cast<std::size_t>(idx[m]);
  }
  return lin;
}

}  // namespace detail

double symmetry_deviation(const DenseTensor& t) {
  detail::require(t.is_cubical(), "symmetry is defined for cubical tensors only");
  const auto& dims = t.dims();
  const auto& e = t.data();
  std::vector<int> idx;
  double dev = 0.0;
  for (std::size_t lin = 0; lin < e.size(); ++lin) {
    detail::decode_index(lin, dims, idx);
    const std::size_t canon = detail::sorted_linear_index(dims, idx);
    dev = std::max(dev, std::abs(e[lin] - e[canon]));
  }
  return dev;
}

DenseTensor symmetrize_dense(const DenseTensor& t) {
  detail::require(t.is_cubical(), "cannot symmetrize a non-cubical tensor");
  const auto& dims = t.dims();
  const auto& e = t.data();
  const std::size_t n = e.size();

  // Orbit accumulation keyed by the sorted multi-index. Orbits whose entries
  // are all bitwise equal keep their value, which makes the map exactly
  // idempotent and the identity on symmetric input.
  std::vector<double> sum(n, 0.0);
  std::vector<std::int64_t> cnt(n, 0);
  std::vector<double> first(n, 0.0);
  std::vector<std::uint8_t> uniform(n, 1);

  std::vector<int> idx;
  for (std::size_t lin = 0; lin < n; ++lin) {
    detail::decode_index(lin, dims, idx);
    const std::size_t canon = detail::sorted_linear_index(dims, idx);
    if (cnt[canon] == 0) {
      first[canon] = e[lin];
    } else if (e[lin] != first[canon]) {
      uniform[canon] = 0;
    }
    sum[canon] += e[lin];
    cnt[canon] += 1;
  }

  std::vector<double> out(n);
  for (std::size_t lin = 0; lin < n; ++lin) {
    detail::decode_index(lin, dims, idx);
    const std::size_t canon = detail::sorted_linear_index(dims, idx);
    out[lin] = uniform[canon] ? first[canon] : sum[canon] / static_cast<double>(cnt[canon]);
  }
  return DenseTensor(dims, std::move(out));
}

namespace {

DenseTensor canonicalize_symmetric(DenseTensor base, SymmetryPolicy policy, double tol) {
  detail::require(base.is_cubical(), "symmetric tensor requires equal dims");
  if (policy == SymmetryPolicy::kVerify) {
    const double dev = symmetry_deviation(base);
    detail::require(dev <= tol, "tensor is not symmetric within tolerance (deviation " +
                                    std::to_string(dev) + ")");
  }
  return symmetrize_dense(base);
}

}  // namespace

SymmetricTensor::SymmetricTensor(DenseTensor base, SymmetryPolicy policy, double tol)
    : base_(canonicalize_symmetric(std::move(base), policy, tol)) {}

std::vector<int> BlockVector::dims() const {
  std::vector<int> d(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) d[i] = static_cast<int>(blocks[i].size());
  return d;
}

bool BlockVector::on_joint_sphere(double tol) const {
  for (const auto& b : blocks) {
    if (std::abs(b.norm() - 1.0) > tol) return false;
  }
  return !blocks.empty();
}

void BlockVector::normalize_blocks() {
  for (auto& b : blocks) {
    const double nrm = b.norm();
    detail::require(nrm > 0.0, "cannot normalize a zero block");
    b /= nrm;
  }
}

OrthogonalMatrix::OrthogonalMatrix(Eigen::MatrixXd values, double tol)
    : values_(std::move(values)) {
  detail::require(values_.rows() == values_.cols(), "orthogonal matrix must be square");
  const Eigen::MatrixXd gram = values_.transpose() * values_;
  const double dev =
      (gram - Eigen::MatrixXd::Identity(values_.rows(), values_.cols())).cwiseAbs().maxCoeff();
  detail::require(dev <= tol, "matrix is not orthogonal within tolerance");
}

}  // namespace tndg

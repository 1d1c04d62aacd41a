#include "tndg/random.hpp"

#include <cmath>
#include <numbers>

namespace tndg {

double GaussianStream::uniform01() {
  // 53-bit mantissa in (0, 1]; never returns 0, so log() below is safe.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

Eigen::VectorXd GaussianStream::normal_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Eigen::VectorXd GaussianStream::unit_vector(int n) {
  while (true) {
    Eigen::VectorXd v = normal_vector(n);
    const double nrm = v.norm();
    if (nrm > 1e-12) return v / nrm;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined word.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DenseTensor random_tensor(const std::vector<int>& dims, std::uint64_t seed) {
  DenseTensor t = DenseTensor::zeros(dims);
  GaussianStream g(seed);
  for (auto& v : t.data()) v = g.normal();
  return t;
}

SymmetricTensor random_symmetric(int n, int k, std::uint64_t seed) {
  return SymmetricTensor(random_tensor(std::vector<int>(k, n), seed),
                         SymmetryPolicy::kSymmetrize);
}

OrthogonalMatrix random_orthogonal(int n, std::uint64_t seed) {
  GaussianStream g(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return OrthogonalMatrix(std::move(q));
}

}  // namespace tndg

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

#include "tndg/dense_tensor.hpp"

namespace tndg {

/// Deterministic Gaussian stream over std::mt19937_64. The engine is fully
/// specified by the standard; std::normal_distribution is not, so Box-Muller
/// is done here to keep seeded output identical across standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double uniform01();  // in (0, 1]
  double normal();

  Eigen::VectorXd normal_vector(int n);
  Eigen::VectorXd unit_vector(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Mix a base seed with a stream index (census trials, multistart starts) so
/// per-index streams are independent and order-free.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Independent standard normal entries; deterministic for a fixed seed.
DenseTensor random_tensor(const std::vector<int>& dims, std::uint64_t seed);

/// Symmetrized standard normal tensor over R^n of order k.
SymmetricTensor random_symmetric(int n, int k, std::uint64_t seed);

/// Haar-distributed orthogonal matrix (QR of a Gaussian with sign fix).
OrthogonalMatrix random_orthogonal(int n, std::uint64_t seed);

}  // namespace tndg

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "fisher_rao/rng.hpp"
#include "fisher_rao/symmat.hpp"

namespace fisher_rao {

/// Random test instances with controlled spectra, reproducible from a seed.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, std::uint64_t stream = 0)
      : rng_(seed, stream) {}

  double uniform(double lo, double hi) { return rng_.uniform(lo, hi); }
  double normal() { return rng_.normal(); }
  std::size_t pick(std::size_t n) {
    return static_cast<std::size_t>(rng_.next_u64() % n);
  }

  Eigen::MatrixXd gaussian_matrix(std::size_t rows, std::size_t cols);
  Eigen::VectorXd gaussian_vector(std::size_t n);

  /// Orthogonal factor of the QR decomposition of a Gaussian matrix.
  Eigen::MatrixXd orthogonal(std::size_t p);

  /// Q diag(values) Q^T for a random orthogonal Q.
  SymmetricMatrix with_spectrum(const Eigen::VectorXd& values);

  /// Symmetric matrix with i.i.d. N(0, scale^2) upper-triangle entries.
  SymmetricMatrix symmetric(std::size_t p, double scale = 1.0);

  /// SPD matrix with log-eigenvalues uniform in [-log_spread, log_spread].
  SpdMatrix spd(std::size_t p, double log_spread = 1.5);

  /// Q1 diag(exp(u)) Q2, u uniform in [-log_spread, log_spread].
  Eigen::MatrixXd invertible(std::size_t p, double log_spread = 1.0);

  /// Tangent direction D at R whose whitened form R^-1/2 D R^-1/2 has
  /// spectral radius `radius`.
  SymmetricMatrix direction(const SpdMatrix& at, double radius);

 private:
  CounterRng rng_;
};

}  // namespace fisher_rao

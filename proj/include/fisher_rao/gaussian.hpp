#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "fisher_rao/symmat.hpp"

namespace fisher_rao {

/// Zero-mean Gaussian N(0, R) viewed as a point of the covariance cone.
class GaussianModel {
 public:
  explicit GaussianModel(SpdMatrix covariance);

  std::size_t dim() const { return covariance_.dim(); }
  const SpdMatrix& covariance() const { return covariance_; }
  const SymmetricMatrix& precision() const { return precision_; }
  double log_det() const { return log_det_; }

  /// -(p/2) log 2pi - 1/2 log|R| - 1/2 x^T R^-1 x.
  double log_pdf(const Eigen::VectorXd& x) const;

  /// x^T R^-1 x.
  double mahalanobis_sq(const Eigen::VectorXd& x) const;

  /// Draw number `index` of the stream keyed by `seed`: R^1/2 z, z ~ N(0, I).
  Eigen::VectorXd draw(std::uint64_t seed, std::uint64_t index) const;

  /// Draws [first, first + n) of the stream. Concatenating adjacent ranges
  /// reproduces a single call over their union.
  std::vector<Eigen::VectorXd> sample_range(std::uint64_t first, std::size_t n,
                                            std::uint64_t seed) const;
  std::vector<Eigen::VectorXd> sample(std::size_t n, std::uint64_t seed) const {
    return sample_range(0, n, seed);
  }

 private:
  SpdMatrix covariance_;
  SymmetricMatrix precision_;
  SymmetricMatrix sqrt_;
  double log_det_;
};

/// First and second derivatives of log p(x; R + tD) at t = 0 for a fixed
/// direction D, with the x-independent parts precomputed.
class DirectionalDerivatives {
 public:
  DirectionalDerivatives(const GaussianModel& model, const SymmetricMatrix& d);

  /// -1/2 tr(R^-1 D) + 1/2 x^T R^-1 D R^-1 x.
  double score(const Eigen::VectorXd& x) const;
  /// 1/2 tr(R^-1 D R^-1 D) - x^T R^-1 D R^-1 D R^-1 x.
  double second_derivative(const Eigen::VectorXd& x) const;

 private:
  std::size_t dim_;
  Eigen::MatrixXd precision_;
  Eigen::MatrixXd d_;
  double half_trace_;     // 1/2 tr(R^-1 D)
  double half_trace_sq_;  // 1/2 tr((R^-1 D)^2)
};

double log_pdf(const GaussianModel& model, const Eigen::VectorXd& x);
double score(const GaussianModel& model, const SymmetricMatrix& d,
             const Eigen::VectorXd& x);
double second_derivative(const GaussianModel& model, const SymmetricMatrix& d,
                         const Eigen::VectorXd& x);
inline std::vector<Eigen::VectorXd> sample(const GaussianModel& model, std::size_t n,
                                           std::uint64_t seed) {
  return model.sample(n, seed);
}

}  // namespace fisher_rao

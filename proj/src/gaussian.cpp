#include "fisher_rao/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "fisher_rao/rng.hpp"

namespace fisher_rao {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

void require_len(std::size_t p, const VectorXd& x, const char* where) {
  if (static_cast<std::size_t>(x.size()) != p) {
    throw DimensionMismatch(p, static_cast<std::size_t>(x.size()), where);
  }
}

}  // namespace

GaussianModel::GaussianModel(SpdMatrix covariance)
    : covariance_(std::move(covariance)),
      precision_(covariance_.inverse()),
      sqrt_(covariance_.sqrt()),
      log_det_(covariance_.log_det()) {}

double GaussianModel::mahalanobis_sq(const VectorXd& x) const {
  require_len(dim(), x, "mahalanobis_sq");
  return x.dot(precision_.matrix() * x);
}

double GaussianModel::log_pdf(const VectorXd& x) const {
  const double p = static_cast<double>(dim());
  return -0.5 * p * std::log(2.0 * std::numbers::pi) - 0.5 * log_det_ -
         0.5 * mahalanobis_sq(x);
}

VectorXd GaussianModel::draw(std::uint64_t seed, std::uint64_t index) const {
  CounterRng rng(seed, index);
  VectorXd z(static_cast<Index>(dim()));
  for (Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
  return sqrt_.matrix() * z;
}

std::vector<VectorXd> GaussianModel::sample_range(std::uint64_t first, std::size_t n,
                                                  std::uint64_t seed) const {
  std::vector<VectorXd> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(draw(seed, first + i));
  return out;
}

DirectionalDerivatives::DirectionalDerivatives(const GaussianModel& model,
                                               const SymmetricMatrix& d)
    : dim_(model.dim()), precision_(model.precision().matrix()), d_(d.matrix()) {
  if (d.dim() != dim_) throw DimensionMismatch(dim_, d.dim(), "DirectionalDerivatives");
  const MatrixXd rd = precision_ * d_;
  half_trace_ = 0.5 * rd.trace();
  half_trace_sq_ = 0.5 * rd.cwiseProduct(rd.transpose()).sum();
}

double DirectionalDerivatives::score(const VectorXd& x) const {
  require_len(dim_, x, "score");
  const VectorXd y = precision_ * x;
  return -half_trace_ + 0.5 * y.dot(d_ * y);
}

double DirectionalDerivatives::second_derivative(const VectorXd& x) const {
  require_len(dim_, x, "second_derivative");
  const VectorXd dy = d_ * (precision_ * x);
  return half_trace_sq_ - dy.dot(precision_ * dy);
}

double log_pdf(const GaussianModel& model, const VectorXd& x) { return model.log_pdf(x); }

double score(const GaussianModel& model, const SymmetricMatrix& d, const VectorXd& x) {
  return DirectionalDerivatives(model, d).score(x);
}

double second_derivative(const GaussianModel& model, const SymmetricMatrix& d,
                         const VectorXd& x) {
  return DirectionalDerivatives(model, d).second_derivative(x);
}

}  // namespace fisher_rao

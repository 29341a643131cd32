#include "fisher_rao/geometry.hpp"

#include <cmath>

namespace fisher_rao {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Below this the logarithm is rounding noise and the distance is reported as 0.
constexpr double kZeroLogNorm = 1e-14;

void require_same_dim(std::size_t expected, std::size_t actual, const char* where) {
  if (expected != actual) throw DimensionMismatch(expected, actual, where);
}

SymmetricMatrix whiten(const SpdMatrix& r, const SpdMatrix& s) {
  return congruence(s.sym(), r.inv_sqrt());
}

}  // namespace

TangentVector::TangentVector(SpdMatrix base_point, SymmetricMatrix dir)
    : base(std::move(base_point)), direction(std::move(dir)) {
  require_same_dim(base.dim(), direction.dim(), "TangentVector");
}

double metric(const SpdMatrix& at, const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_dim(at.dim(), a.dim(), "metric");
  require_same_dim(at.dim(), b.dim(), "metric");
  const MatrixXd inv = at.inverse().matrix();
  const MatrixXd x = inv * a.matrix();
  const MatrixXd y = inv * b.matrix();
  // tr(XY) without forming the product.
  return 0.5 * x.cwiseProduct(y.transpose()).sum();
}

SymmetricMatrix christoffel(const SpdMatrix& at, const SymmetricMatrix& a,
                            const SymmetricMatrix& b) {
  require_same_dim(at.dim(), a.dim(), "christoffel");
  require_same_dim(at.dim(), b.dim(), "christoffel");
  const MatrixXd inv = at.inverse().matrix();
  const MatrixXd ab = a.matrix() * inv * b.matrix();
  const MatrixXd ba = b.matrix() * inv * a.matrix();
  return SymmetricMatrix::symmetrized(-0.5 * (ab + ba));
}

Geodesic::Geodesic(SpdMatrix base, SymmetricMatrix direction)
    : base_(std::move(base)),
      direction_(std::move(direction)),
      sqrt_(base_.sqrt()),
      inv_sqrt_(base_.inv_sqrt()),
      w_(SymmetricMatrix::zero(base_.dim())),
      w_eigen_() {
  require_same_dim(base_.dim(), direction_.dim(), "Geodesic");
  w_ = congruence(direction_, inv_sqrt_);
  w_eigen_ = sym_eigen(w_);
}

MatrixXd Geodesic::exp_w(double t) const {
  return w_eigen_.apply([t](double lambda) { return std::exp(t * lambda); });
}

SpdMatrix Geodesic::point(double t) const {
  return SpdMatrix(congruence(SymmetricMatrix::symmetrized(exp_w(t)), sqrt_));
}

SymmetricMatrix Geodesic::velocity(double t) const {
  return SymmetricMatrix::symmetrized(direction_.matrix() * inv_sqrt_.matrix() *
                                      exp_w(t) * sqrt_.matrix());
}

SymmetricMatrix Geodesic::acceleration(double t) const {
  const MatrixXd& d = direction_.matrix();
  const MatrixXd& is = inv_sqrt_.matrix();
  return SymmetricMatrix::symmetrized(d * is * exp_w(t) * is * d);
}

SpdMatrix exp_map(const SpdMatrix& at, const SymmetricMatrix& v) {
  require_same_dim(at.dim(), v.dim(), "exp_map");
  return Geodesic(at, v).point(1.0);
}

SymmetricMatrix log_map(const SpdMatrix& from, const SpdMatrix& to) {
  require_same_dim(from.dim(), to.dim(), "log_map");
  if (from.matrix() == to.matrix()) return SymmetricMatrix::zero(from.dim());
  const SymmetricMatrix l = matrix_function(whiten(from, to), MatrixFunction::log);
  return congruence(l, from.sqrt());
}

VectorXd pencil_eigenvalues(const SpdMatrix& r, const SpdMatrix& s) {
  require_same_dim(r.dim(), s.dim(), "pencil_eigenvalues");
  EigenDecomposition e = sym_eigen(whiten(r, s));
  if (!spd_valid(e.values)) {
    throw NotPositiveDefinite(e.values(0), e.values(e.values.size() - 1));
  }
  return e.values;
}

double distance(const SpdMatrix& r, const SpdMatrix& s, DistanceConvention conv,
                DistanceMethod method) {
  require_same_dim(r.dim(), s.dim(), "distance");
  if (r.matrix() == s.matrix()) return 0.0;

  double sum_sq = 0.0;
  double log_norm = 0.0;
  if (method == DistanceMethod::trace) {
    const SymmetricMatrix l = matrix_function(whiten(r, s), MatrixFunction::log);
    sum_sq = l.matrix().squaredNorm();  // tr(L^2) for symmetric L
    log_norm = l.max_abs();
  } else {
    const VectorXd logs = pencil_eigenvalues(r, s).array().log();
    sum_sq = logs.squaredNorm();
    log_norm = logs.cwiseAbs().maxCoeff();
  }
  if (log_norm < kZeroLogNorm) return 0.0;
  return conv == DistanceConvention::paper ? std::sqrt(0.5 * sum_sq)
                                           : std::sqrt(sum_sq);
}

}  // namespace fisher_rao

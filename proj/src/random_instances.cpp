#include "fisher_rao/random_instances.hpp"

#include <cmath>

namespace fisher_rao {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd InstanceGenerator::gaussian_matrix(std::size_t rows, std::size_t cols) {
  MatrixXd m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rng_.normal();
  return m;
}

VectorXd InstanceGenerator::gaussian_vector(std::size_t n) {
  VectorXd v(static_cast<Index>(n));
  for (Index i = 0; i < v.size(); ++i) v(i) = rng_.normal();
  return v;
}

MatrixXd InstanceGenerator::orthogonal(std::size_t p) {
  const MatrixXd a = gaussian_matrix(p, p);
  Eigen::HouseholderQR<MatrixXd> qr(a);
  return qr.householderQ();
}

SymmetricMatrix InstanceGenerator::with_spectrum(const VectorXd& values) {
  const MatrixXd q = orthogonal(static_cast<std::size_t>(values.size()));
  return SymmetricMatrix::symmetrized(q * values.asDiagonal() * q.transpose());
}

SymmetricMatrix InstanceGenerator::symmetric(std::size_t p, double scale) {
  MatrixXd m(static_cast<Index>(p), static_cast<Index>(p));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i; j < m.cols(); ++j) m(i, j) = m(j, i) = scale * rng_.normal();
  return SymmetricMatrix(m);
}

SpdMatrix InstanceGenerator::spd(std::size_t p, double log_spread) {
  VectorXd values(static_cast<Index>(p));
  for (Index i = 0; i < values.size(); ++i)
    values(i) = std::exp(rng_.uniform(-log_spread, log_spread));
  return SpdMatrix(with_spectrum(values));
}

MatrixXd InstanceGenerator::invertible(std::size_t p, double log_spread) {
  VectorXd s(static_cast<Index>(p));
  for (Index i = 0; i < s.size(); ++i) s(i) = std::exp(rng_.uniform(-log_spread, log_spread));
  const MatrixXd q1 = orthogonal(p);
  const MatrixXd q2 = orthogonal(p);
  return q1 * s.asDiagonal() * q2;
}

SymmetricMatrix InstanceGenerator::direction(const SpdMatrix& at, double radius) {
  const std::size_t p = at.dim();
  SymmetricMatrix w = symmetric(p);
  const double rho = sym_eigen(w).values.cwiseAbs().maxCoeff();
  if (rho > 0.0) w = (radius / rho) * w;
  return congruence(w, at.sqrt());
}

}  // namespace fisher_rao

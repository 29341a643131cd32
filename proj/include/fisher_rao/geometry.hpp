#pragma once

#include <Eigen/Dense>

#include "fisher_rao/symmat.hpp"

namespace fisher_rao {

/// A direction D attached to a base point R of the cone.
struct TangentVector {
  TangentVector(SpdMatrix base_point, SymmetricMatrix dir);

  SpdMatrix base;
  SymmetricMatrix direction;
};

/// `paper` reports sqrt(1/2 sum log^2 lambda); `smith` drops the 1/2.
enum class DistanceConvention { paper, smith };

/// `pencil` works from the generalized eigenvalues of S - lambda R instead
/// of the matrix logarithm.
enum class DistanceMethod { trace, pencil };

/// Fisher metric g_R(A, B) = 1/2 tr(R^-1 A R^-1 B).
double metric(const SpdMatrix& at, const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Levi-Civita connection in bilinear form,
/// Gamma_R(A, B) = -1/2 (A R^-1 B + B R^-1 A). Exactly symmetric in (a, b).
SymmetricMatrix christoffel(const SpdMatrix& at, const SymmetricMatrix& a,
                            const SymmetricMatrix& b);

/// The geodesic t -> R^1/2 exp(t W) R^1/2 with W = R^-1/2 D R^-1/2, defined
/// for every real t. Square roots of R and the spectrum of W are computed
/// once at construction.
class Geodesic {
 public:
  Geodesic(SpdMatrix base, SymmetricMatrix direction);
  explicit Geodesic(const TangentVector& v) : Geodesic(v.base, v.direction) {}

  const SpdMatrix& base() const { return base_; }
  const SymmetricMatrix& direction() const { return direction_; }
  const SymmetricMatrix& whitened_direction() const { return w_; }

  SpdMatrix point(double t) const;
  /// D R^-1/2 E R^1/2, E = exp(tW).
  SymmetricMatrix velocity(double t) const;
  /// D R^-1/2 E R^-1/2 D.
  SymmetricMatrix acceleration(double t) const;

 private:
  Eigen::MatrixXd exp_w(double t) const;

  SpdMatrix base_;
  SymmetricMatrix direction_;
  SymmetricMatrix sqrt_;
  SymmetricMatrix inv_sqrt_;
  SymmetricMatrix w_;
  EigenDecomposition w_eigen_;
};

inline SpdMatrix geodesic_point(const Geodesic& g, double t) { return g.point(t); }
inline SymmetricMatrix geodesic_velocity(const Geodesic& g, double t) {
  return g.velocity(t);
}

SpdMatrix exp_map(const SpdMatrix& at, const SymmetricMatrix& v);

/// R^1/2 log(R^-1/2 S R^-1/2) R^1/2; exactly zero when from == to.
SymmetricMatrix log_map(const SpdMatrix& from, const SpdMatrix& to);

/// Ascending eigenvalues of R^-1/2 S R^-1/2, i.e. the roots of det(S - lambda R).
Eigen::VectorXd pencil_eigenvalues(const SpdMatrix& r, const SpdMatrix& s);

double distance(const SpdMatrix& r, const SpdMatrix& s,
                DistanceConvention conv = DistanceConvention::paper,
                DistanceMethod method = DistanceMethod::trace);

}  // namespace fisher_rao

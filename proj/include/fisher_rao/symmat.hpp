#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <initializer_list>

#include "fisher_rao/errors.hpp"

namespace fisher_rao {

/// Tolerances shared by the matrix layer. All are relative.
namespace tol {
inline constexpr double asym = 1e-8;          // allowed asymmetry / max-entry
inline constexpr double spd = 1e-12;          // lambda_min floor / lambda_max
inline constexpr double roundtrip = 1e-10;
inline constexpr double ortho = 1e-10;
inline constexpr double recomposition = 1e-10;
}  // namespace tol

inline constexpr int kMaxJacobiSweeps = 100;

/// Largest absolute entry.
double max_abs(const Eigen::MatrixXd& m);

/// Real p x p matrix with exactly equal mirrored entries. Tangent vectors of
/// the cone are values of this type.
class SymmetricMatrix {
 public:
  /// Symmetrizes `raw` as (A + A^T)/2. Throws NotSymmetric when the largest
  /// mirrored difference exceeds tol::asym * max_abs(raw), and
  /// std::invalid_argument for empty, non-square or non-finite input.
  explicit SymmetricMatrix(const Eigen::MatrixXd& raw);
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

  /// Symmetrizes without the drift check. For computed results whose
  /// asymmetry is rounding only.
  static SymmetricMatrix symmetrized(const Eigen::MatrixXd& raw);

  static SymmetricMatrix zero(std::size_t p);
  static SymmetricMatrix identity(std::size_t p);
  static SymmetricMatrix diagonal(const Eigen::VectorXd& d);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double max_abs() const { return fisher_rao::max_abs(m_); }
  double trace() const { return m_.trace(); }

  friend SymmetricMatrix operator+(const SymmetricMatrix& a,
                                   const SymmetricMatrix& b);
  friend SymmetricMatrix operator-(const SymmetricMatrix& a,
                                   const SymmetricMatrix& b);
  friend SymmetricMatrix operator*(double s, const SymmetricMatrix& a);
  SymmetricMatrix operator-() const;
  bool operator==(const SymmetricMatrix& o) const { return m_ == o.m_; }

 private:
  struct Trusted {};
  SymmetricMatrix(Trusted, Eigen::MatrixXd m) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

/// Orthonormal eigenvectors (columns) and ascending eigenvalues.
struct EigenDecomposition {
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;

  /// Q * diag(f(values)) * Q^T.
  template <typename F>
  Eigen::MatrixXd apply(F&& f) const {
    Eigen::VectorXd fv = values.unaryExpr(f);
    return vectors * fv.asDiagonal() * vectors.transpose();
  }
};

/// Cyclic Jacobi rotations. Throws ConvergenceFailure after
/// kMaxJacobiSweeps sweeps.
EigenDecomposition sym_eigen(const SymmetricMatrix& m);

enum class MatrixFunction { exp, log, sqrt, inv_sqrt, inv };

/// Point of the SPD cone. The eigendecomposition is computed once at
/// construction and reused by every matrix function.
class SpdMatrix {
 public:
  /// Throws NotPositiveDefinite unless lambda_min > tol::spd * lambda_max.
  explicit SpdMatrix(SymmetricMatrix m);
  explicit SpdMatrix(const Eigen::MatrixXd& raw)
      : SpdMatrix(SymmetricMatrix(raw)) {}
  SpdMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : SpdMatrix(SymmetricMatrix(rows)) {}

  static SpdMatrix identity(std::size_t p);

  std::size_t dim() const { return base_.dim(); }
  const SymmetricMatrix& sym() const { return base_; }
  const Eigen::MatrixXd& matrix() const { return base_.matrix(); }
  const EigenDecomposition& eigen() const { return eigen_; }
  double lambda_min() const { return eigen_.values(0); }
  double lambda_max() const { return eigen_.values(eigen_.values.size() - 1); }
  double log_det() const;

  SymmetricMatrix sqrt() const;
  SymmetricMatrix inv_sqrt() const;
  SymmetricMatrix inverse() const;
  SymmetricMatrix log() const;

 private:
  SymmetricMatrix base_;
  EigenDecomposition eigen_;
};

/// True when the ascending spectrum passes the SPD floor.
bool spd_valid(const Eigen::VectorXd& ascending_values);

/// Q diag(f(lambda)) Q^T. Throws NotPositiveDefinite for log, sqrt,
/// inv_sqrt and inv when m is not SPD-valid.
SymmetricMatrix matrix_function(const SymmetricMatrix& m, MatrixFunction f);
SymmetricMatrix matrix_function(const SpdMatrix& m, MatrixFunction f);

/// g * m * g^T.
SymmetricMatrix congruence(const SymmetricMatrix& m, const Eigen::MatrixXd& g);
SymmetricMatrix congruence(const SymmetricMatrix& m, const SymmetricMatrix& g);

}  // namespace fisher_rao

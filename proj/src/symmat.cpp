#include "fisher_rao/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fisher_rao {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

double max_abs(const MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

void require_square_finite(const MatrixXd& raw) {
  if (raw.rows() == 0 || raw.rows() != raw.cols()) {
    throw std::invalid_argument("symmetric matrix must be square with dim >= 1");
  }
  if (!raw.allFinite()) {
    throw std::invalid_argument("symmetric matrix has non-finite entries");
  }
}

MatrixXd from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  MatrixXd m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) {
      throw std::invalid_argument("symmetric matrix rows must have length " +
                                  std::to_string(n));
    }
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// One plane rotation applied to the pair (a(i,j), a(k,l)).
inline void rotate(MatrixXd& a, double s, double tau, Index i, Index j, Index k,
                   Index l) {
  const double g = a(i, j);
  const double h = a(k, l);
  a(i, j) = g - s * (h + g * tau);
  a(k, l) = h + s * (g - h * tau);
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(const MatrixXd& raw) {
  require_square_finite(raw);
  const double asym = fisher_rao::max_abs(raw - raw.transpose());
  const double allowed = tol::asym * fisher_rao::max_abs(raw);
  if (asym > allowed) throw NotSymmetric(asym, allowed);
  m_ = 0.5 * (raw + raw.transpose());
}

SymmetricMatrix::SymmetricMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : SymmetricMatrix(from_rows(rows)) {}

SymmetricMatrix SymmetricMatrix::symmetrized(const MatrixXd& raw) {
  require_square_finite(raw);
  return SymmetricMatrix(Trusted{}, 0.5 * (raw + raw.transpose()));
}

SymmetricMatrix SymmetricMatrix::zero(std::size_t p) {
  if (p == 0) throw std::invalid_argument("dim must be >= 1");
  const auto n = static_cast<Index>(p);
  return SymmetricMatrix(Trusted{}, MatrixXd::Zero(n, n));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t p) {
  if (p == 0) throw std::invalid_argument("dim must be >= 1");
  const auto n = static_cast<Index>(p);
  return SymmetricMatrix(Trusted{}, MatrixXd::Identity(n, n));
}

SymmetricMatrix SymmetricMatrix::diagonal(const VectorXd& d) {
  if (d.size() == 0) throw std::invalid_argument("dim must be >= 1");
  return SymmetricMatrix(Trusted{}, MatrixXd(d.asDiagonal()));
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim(), "operator+");
  return SymmetricMatrix(SymmetricMatrix::Trusted{}, a.m_ + b.m_);
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim(), "operator-");
  return SymmetricMatrix(SymmetricMatrix::Trusted{}, a.m_ - b.m_);
}

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) {
  return SymmetricMatrix(SymmetricMatrix::Trusted{}, s * a.m_);
}

SymmetricMatrix SymmetricMatrix::operator-() const {
  return SymmetricMatrix(Trusted{}, -m_);
}

EigenDecomposition sym_eigen(const SymmetricMatrix& m) {
  const Index n = static_cast<Index>(m.dim());
  MatrixXd a = m.matrix();
  MatrixXd v = MatrixXd::Identity(n, n);
  VectorXd d = a.diagonal();
  VectorXd b = d;
  VectorXd z = VectorXd::Zero(n);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (Index p = 0; p < n - 1; ++p)
      for (Index q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    if (off == 0.0) {
      converged = true;
      break;
    }
    // Early sweeps only rotate the large off-diagonal entries.
    const double thresh =
        sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(a(p, q));
        if (sweep > 3 && std::abs(d(p)) + g == std::abs(d(p)) &&
            std::abs(d(q)) + g == std::abs(d(q))) {
          a(p, q) = 0.0;
        } else if (std::abs(a(p, q)) > thresh) {
          double h = d(q) - d(p);
          double t;
          if (std::abs(h) + g == std::abs(h)) {
            t = a(p, q) / h;
          } else {
            const double theta = 0.5 * h / a(p, q);
            t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          h = t * a(p, q);
          z(p) -= h;
          z(q) += h;
          d(p) -= h;
          d(q) += h;
          a(p, q) = 0.0;
          for (Index j = 0; j < p; ++j) rotate(a, s, tau, j, p, j, q);
          for (Index j = p + 1; j < q; ++j) rotate(a, s, tau, p, j, j, q);
          for (Index j = q + 1; j < n; ++j) rotate(a, s, tau, p, j, q, j);
          for (Index j = 0; j < n; ++j) rotate(v, s, tau, j, p, j, q);
        }
      }
    }
    b += z;
    d = b;
    z.setZero();
  }
  if (!converged) {
    throw ConvergenceFailure("Jacobi eigensolver did not converge in " +
                             std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return d(i) < d(j); });

  EigenDecomposition out{MatrixXd(n, n), VectorXd(n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = d(src);
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

bool spd_valid(const VectorXd& values) {
  const double lo = values(0);
  const double hi = values(values.size() - 1);
  return lo > 0.0 && lo > tol::spd * hi;
}

SpdMatrix::SpdMatrix(SymmetricMatrix m)
    : base_(std::move(m)), eigen_(sym_eigen(base_)) {
  if (!spd_valid(eigen_.values)) throw NotPositiveDefinite(lambda_min(), lambda_max());
}

SpdMatrix SpdMatrix::identity(std::size_t p) {
  return SpdMatrix(SymmetricMatrix::identity(p));
}

double SpdMatrix::log_det() const {
  return eigen_.values.array().log().sum();
}

SymmetricMatrix SpdMatrix::sqrt() const {
  return matrix_function(*this, MatrixFunction::sqrt);
}
SymmetricMatrix SpdMatrix::inv_sqrt() const {
  return matrix_function(*this, MatrixFunction::inv_sqrt);
}
SymmetricMatrix SpdMatrix::inverse() const {
  return matrix_function(*this, MatrixFunction::inv);
}
SymmetricMatrix SpdMatrix::log() const {
  return matrix_function(*this, MatrixFunction::log);
}

namespace {

SymmetricMatrix apply_function(const EigenDecomposition& e, MatrixFunction f) {
  if (f != MatrixFunction::exp && !spd_valid(e.values)) {
    throw NotPositiveDefinite(e.values(0), e.values(e.values.size() - 1));
  }
  switch (f) {
    case MatrixFunction::exp:
      return SymmetricMatrix::symmetrized(e.apply([](double x) { return std::exp(x); }));
    case MatrixFunction::log:
      return SymmetricMatrix::symmetrized(e.apply([](double x) { return std::log(x); }));
    case MatrixFunction::sqrt:
      return SymmetricMatrix::symmetrized(e.apply([](double x) { return std::sqrt(x); }));
    case MatrixFunction::inv_sqrt:
      return SymmetricMatrix::symmetrized(
          e.apply([](double x) { return 1.0 / std::sqrt(x); }));
    case MatrixFunction::inv:
      return SymmetricMatrix::symmetrized(e.apply([](double x) { return 1.0 / x; }));
  }
  throw std::invalid_argument("unknown matrix function");
}

}  // namespace

SymmetricMatrix matrix_function(const SymmetricMatrix& m, MatrixFunction f) {
  return apply_function(sym_eigen(m), f);
}

SymmetricMatrix matrix_function(const SpdMatrix& m, MatrixFunction f) {
  return apply_function(m.eigen(), f);
}

SymmetricMatrix congruence(const SymmetricMatrix& m, const MatrixXd& g) {
  const auto p = static_cast<Index>(m.dim());
  if (g.rows() != p) throw DimensionMismatch(m.dim(), static_cast<std::size_t>(g.rows()), "congruence");
  if (g.cols() != p) throw DimensionMismatch(m.dim(), static_cast<std::size_t>(g.cols()), "congruence");
  return SymmetricMatrix::symmetrized(g * m.matrix() * g.transpose());
}

SymmetricMatrix congruence(const SymmetricMatrix& m, const SymmetricMatrix& g) {
  return congruence(m, g.matrix());
}

}  // namespace fisher_rao

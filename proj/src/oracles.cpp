#include "fisher_rao/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "fisher_rao/gaussian.hpp"

namespace fisher_rao {

using Eigen::MatrixXd;

VerificationReport VerificationReport::make(std::string name, double residual,
                                            double tolerance,
                                            std::optional<std::uint64_t> seed,
                                            std::string details) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.seed = seed;
  r.details = std::move(details);
  return r;
}

namespace {

struct Slope {
  MatrixXd position;
  MatrixXd velocity;
};

// Returns nullopt when `g` has no Cholesky factor.
std::optional<Slope> geodesic_field(const MatrixXd& g, const MatrixXd& v) {
  Eigen::LLT<MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) return std::nullopt;
  return Slope{v, v * llt.solve(v)};
}

}  // namespace

OdeSolution integrate_geodesic_ode(const SpdMatrix& r, const SymmetricMatrix& d,
                                   double t_end, std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("integrate_geodesic_ode: steps must be >= 1");
  if (d.dim() != r.dim()) throw DimensionMismatch(r.dim(), d.dim(), "integrate_geodesic_ode");

  const double h = t_end / static_cast<double>(steps);
  OdeSolution sol;
  sol.step_size = h;
  sol.times.reserve(steps + 1);
  sol.states.reserve(steps + 1);
  sol.times.push_back(0.0);
  sol.states.push_back({r.sym(), d});

  MatrixXd g = r.matrix();
  MatrixXd v = d.matrix();
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k - 1) * h;
    auto k1 = geodesic_field(g, v);
    if (!k1) throw LeftCone(k, t);
    auto k2 = geodesic_field(g + 0.5 * h * k1->position, v + 0.5 * h * k1->velocity);
    if (!k2) throw LeftCone(k, t + 0.5 * h);
    auto k3 = geodesic_field(g + 0.5 * h * k2->position, v + 0.5 * h * k2->velocity);
    if (!k3) throw LeftCone(k, t + 0.5 * h);
    auto k4 = geodesic_field(g + h * k3->position, v + h * k3->velocity);
    if (!k4) throw LeftCone(k, t + h);

    g += (h / 6.0) * (k1->position + 2.0 * k2->position + 2.0 * k3->position + k4->position);
    v += (h / 6.0) * (k1->velocity + 2.0 * k2->velocity + 2.0 * k3->velocity + k4->velocity);
    g = 0.5 * (g + g.transpose()).eval();
    v = 0.5 * (v + v.transpose()).eval();

    SymmetricMatrix position = SymmetricMatrix::symmetrized(g);
    if (!spd_valid(sym_eigen(position).values)) throw LeftCone(k, t + h);
    sol.times.push_back(k == steps ? t_end : static_cast<double>(k) * h);
    sol.states.push_back({std::move(position), SymmetricMatrix::symmetrized(v)});
  }
  return sol;
}

double inverse_derivative_tolerance(const SpdMatrix& r, const SymmetricMatrix& d,
                                    double step) {
  const double c = 10.0 * std::pow(r.inverse().max_abs() * d.max_abs(), 3.0);
  return c * step * step;
}

VerificationReport check_inverse_derivative(const SpdMatrix& r, const SymmetricMatrix& d,
                                            double step) {
  if (d.dim() != r.dim()) throw DimensionMismatch(r.dim(), d.dim(), "check_inverse_derivative");
  if (!(step > 0.0)) throw std::invalid_argument("check_inverse_derivative: step must be > 0");
  const SpdMatrix plus(r.sym() + step * d);
  const SpdMatrix minus(r.sym() - step * d);
  const MatrixXd fd = (plus.inverse().matrix() - minus.inverse().matrix()) / (2.0 * step);
  const MatrixXd inv = r.inverse().matrix();
  const MatrixXd analytic = -inv * d.matrix() * inv;
  const double residual = max_abs(fd - analytic);
  return VerificationReport::make("inverse_derivative", residual,
                                  inverse_derivative_tolerance(r, d, step), std::nullopt,
                                  "step=" + std::to_string(step));
}

MonteCarloEstimate mc_fisher(const SpdMatrix& r, const SymmetricMatrix& d, std::size_t n,
                             std::uint64_t seed, FisherForm form) {
  if (n < 2) throw std::invalid_argument("mc_fisher: n must be >= 2");
  const GaussianModel model(r);
  const DirectionalDerivatives deriv(model, d);

  // Welford running mean and sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::VectorXd x = model.draw(seed, i);
    double value;
    if (form == FisherForm::score) {
      const double s = deriv.score(x);
      value = s * s;
    } else {
      value = -deriv.second_derivative(x);
    }
    const double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  const double nd = static_cast<double>(n);
  const double variance = m2 / (nd - 1.0);
  return {mean, std::sqrt(variance / nd)};
}

SymmetricMatrix fd_path_derivative(const MatrixPath& path, double t, double step,
                                   int order) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_path_derivative: step must be > 0");
  if (order == 1) {
    return (1.0 / (2.0 * step)) * (path(t + step) - path(t - step));
  }
  if (order == 2) {
    const SymmetricMatrix mid = path(t);
    return (1.0 / (step * step)) * ((path(t + step) - mid) + (path(t - step) - mid));
  }
  throw std::invalid_argument("fd_path_derivative: order must be 1 or 2");
}

}  // namespace fisher_rao

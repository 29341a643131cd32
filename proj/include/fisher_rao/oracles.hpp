#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fisher_rao/symmat.hpp"

namespace fisher_rao {

/// Outcome of one verification check. `passed` is residual <= tolerance;
/// a NaN residual never passes.
struct VerificationReport {
  std::string check_name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<std::uint64_t> seed;
  std::string details;

  static VerificationReport make(std::string name, double residual, double tolerance,
                                 std::optional<std::uint64_t> seed = std::nullopt,
                                 std::string details = {});

  bool operator==(const VerificationReport&) const = default;
};

struct GeodesicState {
  SymmetricMatrix position;
  SymmetricMatrix velocity;
};

struct OdeSolution {
  std::vector<double> times;
  std::vector<GeodesicState> states;
  double step_size = 0.0;

  const GeodesicState& final_state() const { return states.back(); }
};

/// Classical fixed-step RK4 on (gamma, gamma')' = (gamma', gamma' gamma^-1 gamma').
/// The linear solves go through a Cholesky factorization, independent of the
/// eigen machinery behind the closed-form geodesic. Both components are
/// re-symmetrized after every step. Throws LeftCone if a stage or stored
/// state is not SPD.
OdeSolution integrate_geodesic_ode(const SpdMatrix& r, const SymmetricMatrix& d,
                                   double t_end, std::size_t steps);

/// 10 (|r^-1| |d|)^3 step^2 with max-entry norms.
double inverse_derivative_tolerance(const SpdMatrix& r, const SymmetricMatrix& d,
                                    double step);

/// Central difference of R -> R^-1 along d against -R^-1 d R^-1.
VerificationReport check_inverse_derivative(const SpdMatrix& r, const SymmetricMatrix& d,
                                            double step);

enum class FisherForm { score, hessian };

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Sample mean of score^2 (score form) or of -second_derivative (hessian
/// form) over n draws of N(0, r). std_error is sample sd / sqrt(n).
MonteCarloEstimate mc_fisher(const SpdMatrix& r, const SymmetricMatrix& d, std::size_t n,
                             std::uint64_t seed, FisherForm form);

using MatrixPath = std::function<SymmetricMatrix(double)>;

/// order 1: (f(t+h) - f(t-h)) / 2h.  order 2: (f(t+h) - 2 f(t) + f(t-h)) / h^2.
SymmetricMatrix fd_path_derivative(const MatrixPath& path, double t, double step,
                                   int order);

}  // namespace fisher_rao

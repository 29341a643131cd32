#include <gtest/gtest.h>

#include <cmath>

#include "fisher_rao/geometry.hpp"
#include "fisher_rao/oracles.hpp"
#include "fisher_rao/random_instances.hpp"

namespace {

using namespace fisher_rao;
using Eigen::MatrixXd;

double rel_err(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return (a - b).max_abs() / b.max_abs();
}

TEST(GeodesicOde, ZeroVelocityStaysPut) {
  const SpdMatrix r{{2.0, 1.0}, {1.0, 2.0}};
  const auto sol = integrate_geodesic_ode(r, SymmetricMatrix::zero(2), 1.0, 10);
  ASSERT_EQ(sol.states.size(), 11u);
  ASSERT_EQ(sol.times.back(), 1.0);
  EXPECT_EQ(sol.final_state().position, r.sym());
  EXPECT_EQ(sol.final_state().velocity, SymmetricMatrix::zero(2));
}

TEST(GeodesicOde, ScalarReachesE) {
  const auto sol = integrate_geodesic_ode(SpdMatrix{{1.0}}, SymmetricMatrix{{1.0}}, 1.0, 100);
  EXPECT_NEAR(sol.final_state().position(0, 0), std::exp(1.0), 1e-8);
  EXPECT_NEAR(sol.final_state().velocity(0, 0), std::exp(1.0), 1e-8);
}

TEST(GeodesicOde, MatchesClosedFormAtPEqualsThree) {
  InstanceGenerator gen(50);
  for (int k = 0; k < 10; ++k) {
    const SpdMatrix r = gen.spd(3);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    const auto sol = integrate_geodesic_ode(r, d, 1.0, 1000);
    const Geodesic geo(r, d);
    EXPECT_LE(rel_err(sol.final_state().position, geo.point(1.0).sym()), 1e-8);
    EXPECT_LE(rel_err(sol.final_state().velocity, geo.velocity(1.0)), 1e-7);
    // Intermediate stored states follow the same curve.
    EXPECT_LE(rel_err(sol.states[500].position, geo.point(sol.times[500]).sym()), 1e-8);
  }
}

TEST(GeodesicOde, ErrorShrinksAtFourthOrder) {
  InstanceGenerator gen(51);
  const SpdMatrix r = gen.spd(2);
  const SymmetricMatrix d = gen.direction(r, 1.0);
  const SymmetricMatrix exact = Geodesic(r, d).point(1.0).sym();
  const double e1 = rel_err(integrate_geodesic_ode(r, d, 1.0, 20).final_state().position, exact);
  const double e2 = rel_err(integrate_geodesic_ode(r, d, 1.0, 40).final_state().position, exact);
  EXPECT_GE(e1 / e2, 12.0);
  EXPECT_LE(e1 / e2, 20.0);
}

TEST(GeodesicOde, CoarseStepLeavesCone) {
  // The first RK4 midpoint stage sits at 1 + 0.5 * (-10) < 0.
  try {
    integrate_geodesic_ode(SpdMatrix{{1.0}}, SymmetricMatrix{{-10.0}}, 1.0, 1);
    FAIL() << "expected LeftCone";
  } catch (const LeftCone& e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(GeodesicOde, RejectsBadArguments) {
  EXPECT_THROW(integrate_geodesic_ode(SpdMatrix::identity(2), SymmetricMatrix::zero(2), 1.0, 0),
               std::invalid_argument);
  EXPECT_THROW(integrate_geodesic_ode(SpdMatrix::identity(2), SymmetricMatrix::zero(3), 1.0, 5),
               DimensionMismatch);
}

TEST(InverseDerivative, ZeroDirectionIsExact) {
  const auto rep = check_inverse_derivative(SpdMatrix{{2.0, 1.0}, {1.0, 2.0}},
                                            SymmetricMatrix::zero(2), 1e-3);
  EXPECT_EQ(rep.residual, 0.0);
  EXPECT_TRUE(rep.passed);
}

TEST(InverseDerivative, ScalarQuadraticRate) {
  // (1/(2+h) - 1/(2-h)) / 2h = -1/(4 - h^2), so the residual is h^2/(16 - 4h^2).
  for (double h : {1e-1, 1e-2, 1e-3}) {
    const auto rep = check_inverse_derivative(SpdMatrix{{2.0}}, SymmetricMatrix{{1.0}}, h);
    const double expected = h * h / (16.0 - 4.0 * h * h);
    EXPECT_NEAR(rep.residual, expected, 1e-6 * expected + 1e-15);
    EXPECT_TRUE(rep.passed);
  }
}

TEST(InverseDerivative, RandomInstancesPassSmallStep) {
  InstanceGenerator gen(52);
  for (int k = 0; k < 20; ++k) {
    const SpdMatrix r = gen.spd(4, 1.0);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    const auto rep = check_inverse_derivative(r, d, 1e-4);
    EXPECT_LT(rep.residual, 1e-6);
    EXPECT_TRUE(rep.passed) << rep.residual << " > " << rep.tolerance;
  }
}

TEST(InverseDerivative, CatchesSignError) {
  // Against +R^-1 D R^-1 the residual would be twice the derivative itself.
  const SpdMatrix r{{2.0}};
  const SymmetricMatrix d{{1.0}};
  const double wrong = std::abs(0.25 - (-0.25));
  EXPECT_GT(wrong, inverse_derivative_tolerance(r, d, 1e-2));
}

TEST(MonteCarloFisher, ZeroDirection) {
  for (auto form : {FisherForm::score, FisherForm::hessian}) {
    const auto est = mc_fisher(SpdMatrix::identity(2), SymmetricMatrix::zero(2), 1000, 1, form);
    EXPECT_EQ(est.estimate, 0.0);
    EXPECT_EQ(est.std_error, 0.0);
  }
}

TEST(MonteCarloFisher, ScalarTargetIsOneHalf) {
  for (auto form : {FisherForm::score, FisherForm::hessian}) {
    const auto est = mc_fisher(SpdMatrix{{1.0}}, SymmetricMatrix{{1.0}}, 1'000'000, 7, form);
    EXPECT_GT(est.std_error, 0.0);
    EXPECT_LE(std::abs(est.estimate - 0.5), 4.0 * est.std_error);
  }
}

TEST(MonteCarloFisher, BothFormsMatchMetricAtPEqualsThree) {
  InstanceGenerator gen(53);
  const SpdMatrix r = gen.spd(3);
  const SymmetricMatrix d = gen.direction(r, 1.0);
  const double target = metric(r, d, d);
  const auto s = mc_fisher(r, d, 1'000'000, 8, FisherForm::score);
  const auto h = mc_fisher(r, d, 1'000'000, 8, FisherForm::hessian);
  EXPECT_LE(std::abs(s.estimate - target), 4.0 * s.std_error);
  EXPECT_LE(std::abs(h.estimate - target), 4.0 * h.std_error);
  EXPECT_LE(std::abs(s.estimate - h.estimate),
            6.0 * std::hypot(s.std_error, h.std_error));
}

TEST(MonteCarloFisher, DeterministicAndRejectsTinySample) {
  const SpdMatrix r{{2.0, 1.0}, {1.0, 2.0}};
  const SymmetricMatrix d{{1.0, 0.0}, {0.0, -1.0}};
  const auto a = mc_fisher(r, d, 5000, 3, FisherForm::score);
  const auto b = mc_fisher(r, d, 5000, 3, FisherForm::score);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_THROW(mc_fisher(r, d, 1, 3, FisherForm::score), std::invalid_argument);
}

TEST(PathDerivative, ConstantPathIsZero) {
  const SymmetricMatrix a{{1.0, 2.0}, {2.0, 3.0}};
  const MatrixPath path = [&](double) { return a; };
  for (int order : {1, 2})
    EXPECT_EQ(fd_path_derivative(path, 0.3, 1e-3, order), SymmetricMatrix::zero(2));
}

TEST(PathDerivative, LinearPathIsExact) {
  const SymmetricMatrix a{{1.0, -2.0}, {-2.0, 3.0}};
  const MatrixPath path = [&](double t) { return t * a; };
  EXPECT_EQ(fd_path_derivative(path, 0.0, 0.5, 1), a);
  EXPECT_EQ(fd_path_derivative(path, 0.0, 0.5, 2), SymmetricMatrix::zero(2));
}

TEST(PathDerivative, ExponentialPathConvergesQuadratically) {
  // Error of the central difference of e^t at 0 is h^2/6 + O(h^4).
  const SymmetricMatrix a{{1.0, 0.5}, {0.5, 2.0}};
  const MatrixPath path = [&](double t) { return std::exp(t) * a; };
  double previous = 0.0;
  for (double h : {1e-1, 5e-2, 2.5e-2}) {
    const double err = (fd_path_derivative(path, 0.0, h, 1) - a).max_abs();
    EXPECT_NEAR(err, a.max_abs() * h * h / 6.0, a.max_abs() * h * h * h * h / 60.0);
    if (previous > 0.0) EXPECT_NEAR(previous / err, 4.0, 0.05);
    previous = err;
  }
}

TEST(PathDerivative, RejectsUnknownOrder) {
  const MatrixPath path = [](double) { return SymmetricMatrix::identity(1); };
  EXPECT_THROW(fd_path_derivative(path, 0.0, 1e-3, 3), std::invalid_argument);
  EXPECT_THROW(fd_path_derivative(path, 0.0, 0.0, 1), std::invalid_argument);
}

}  // namespace

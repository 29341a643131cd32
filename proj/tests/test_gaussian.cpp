#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fisher_rao/gaussian.hpp"
#include "fisher_rao/geometry.hpp"
#include "fisher_rao/random_instances.hpp"

namespace {

using namespace fisher_rao;
using Eigen::MatrixXd;
using Eigen::VectorXd;

const double kLog2Pi = std::log(2.0 * std::numbers::pi);

VectorXd vec(std::initializer_list<double> v) {
  VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double e : v) x(i++) = e;
  return x;
}

TEST(LogPdf, StandardNormalAtMode) {
  const GaussianModel m(SpdMatrix{{1.0}});
  EXPECT_NEAR(log_pdf(m, vec({0.0})), -0.9189385332046727, 1e-15);
}

TEST(LogPdf, IdentityCovariance) {
  const GaussianModel m(SpdMatrix::identity(2));
  EXPECT_NEAR(log_pdf(m, vec({1.0, 1.0})), -kLog2Pi - 1.0, 1e-15);
}

TEST(LogPdf, TwoByTwoFixture) {
  // |R| = 3, x^T R^-1 x = 2/3 by the 2x2 inverse formula.
  const GaussianModel m(SpdMatrix{{2.0, 1.0}, {1.0, 2.0}});
  EXPECT_NEAR(log_pdf(m, vec({1.0, 0.0})), -2.72051654407673366259161542460583146538, 1e-14);
}

TEST(LogPdf, DimensionMismatch) {
  const GaussianModel m(SpdMatrix::identity(2));
  EXPECT_THROW(log_pdf(m, vec({1.0})), DimensionMismatch);
  EXPECT_THROW(score(m, SymmetricMatrix::identity(2), vec({1.0, 2.0, 3.0})), DimensionMismatch);
  EXPECT_THROW(score(m, SymmetricMatrix::identity(3), vec({1.0, 2.0})), DimensionMismatch);
  EXPECT_THROW(second_derivative(m, SymmetricMatrix::identity(2), vec({1.0})), DimensionMismatch);
}

TEST(LogPdf, LogDetConsistency) {
  InstanceGenerator gen(41);
  for (int k = 0; k < 200; ++k) {
    const std::size_t p = 1 + gen.pick(8);
    const GaussianModel m(gen.spd(p, 2.0));
    const VectorXd x = gen.gaussian_vector(p);
    const double quad = 0.5 * m.mahalanobis_sq(x);
    const double half_log_2pi = 0.5 * static_cast<double>(p) * kLog2Pi;
    const double recovered = -2.0 * (m.log_pdf(x) + half_log_2pi + quad);
    const double from_spectrum = m.covariance().eigen().values.array().log().sum();
    ASSERT_NEAR(recovered, from_spectrum, 1e-12 * std::max({1.0, half_log_2pi, quad}));
    // Independent determinant via Cholesky.
    Eigen::LLT<MatrixXd> llt(m.covariance().matrix());
    const double chol = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    ASSERT_NEAR(m.log_det(), chol, 1e-12 * std::max(1.0, std::abs(chol)));
  }
}

TEST(Score, ZeroDirection) {
  const GaussianModel m(SpdMatrix{{2.0, 1.0}, {1.0, 2.0}});
  EXPECT_EQ(score(m, SymmetricMatrix::zero(2), vec({0.3, -7.0})), 0.0);
  EXPECT_EQ(second_derivative(m, SymmetricMatrix::zero(2), vec({0.3, -7.0})), 0.0);
}

TEST(Score, ScalarCase) {
  const GaussianModel m(SpdMatrix{{1.0}});
  for (double x : {-2.0, 0.0, 0.5, 3.0}) {
    EXPECT_NEAR(score(m, SymmetricMatrix{{1.0}}, vec({x})), -0.5 + 0.5 * x * x, 1e-15);
    EXPECT_NEAR(second_derivative(m, SymmetricMatrix{{1.0}}, vec({x})), 0.5 - x * x, 1e-15);
  }
}

TEST(Score, MatchesFiniteDifferenceOfLogPdf) {
  InstanceGenerator gen(42);
  constexpr double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const std::size_t p = 1 + gen.pick(6);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    const VectorXd x = gen.gaussian_vector(p);
    const double fd = (log_pdf(GaussianModel(SpdMatrix(r.sym() + h * d)), x) -
                       log_pdf(GaussianModel(SpdMatrix(r.sym() - h * d)), x)) /
                      (2.0 * h);
    ASSERT_NEAR(score(GaussianModel(r), d, x), fd, 1e-7);
  }
}

TEST(SecondDerivative, MatchesSecondDifferenceOfLogPdf) {
  InstanceGenerator gen(43);
  constexpr double h = 1e-4;
  for (int k = 0; k < 100; ++k) {
    const std::size_t p = 1 + gen.pick(6);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    const VectorXd x = gen.gaussian_vector(p);
    const double mid = log_pdf(GaussianModel(r), x);
    const double fd = (log_pdf(GaussianModel(SpdMatrix(r.sym() + h * d)), x) - 2.0 * mid +
                       log_pdf(GaussianModel(SpdMatrix(r.sym() - h * d)), x)) /
                      (h * h);
    ASSERT_NEAR(second_derivative(GaussianModel(r), d, x), fd, 1e-5);
  }
}

TEST(SecondDerivative, ExpectationIsMinusMetricAnalytically) {
  // E[x x^T] = R turns the quadratic term into tr((R^-1 D)^2).
  InstanceGenerator gen(44);
  for (int k = 0; k < 50; ++k) {
    const std::size_t p = 1 + gen.pick(6);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix d = gen.symmetric(p);
    const MatrixXd inv = r.inverse().matrix();
    const MatrixXd quad = inv * d.matrix() * inv * d.matrix() * inv;
    const double expected_second = 0.5 * (inv * d.matrix() * inv * d.matrix()).trace() -
                                   (quad * r.matrix()).trace();
    ASSERT_NEAR(-expected_second, metric(r, d, d), 1e-12 * metric(r, d, d));
  }
}

TEST(Sample, DeterministicForFixedSeed) {
  const GaussianModel m(SpdMatrix{{2.0, 1.0}, {1.0, 2.0}});
  const auto a = sample(m, 1000, 5);
  const auto b = sample(m, 1000, 5);
  ASSERT_EQ(a.size(), 1000u);
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i], b[i]);
  const auto c = sample(m, 1000, 6);
  EXPECT_NE(a[0], c[0]);
}

TEST(Sample, DisjointRangesConcatenate) {
  const GaussianModel m(SpdMatrix{{2.0, 1.0}, {1.0, 2.0}});
  const auto whole = m.sample(300, 9);
  const auto head = m.sample_range(0, 120, 9);
  const auto tail = m.sample_range(120, 180, 9);
  for (std::size_t i = 0; i < 120; ++i) ASSERT_EQ(whole[i], head[i]);
  for (std::size_t i = 0; i < 180; ++i) ASSERT_EQ(whole[120 + i], tail[i]);
}

TEST(Sample, MomentsOfMillionDraws) {
  const std::size_t n = 1'000'000;
  const GaussianModel m(SpdMatrix::identity(2));
  VectorXd mean = VectorXd::Zero(2);
  MatrixXd cov = MatrixXd::Zero(2, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const VectorXd x = m.draw(17, i);
    mean += x;
    cov += x * x.transpose();
  }
  mean /= static_cast<double>(n);
  cov /= static_cast<double>(n);
  // Standard error of each covariance entry is about sqrt(2/n) = 1.4e-3.
  EXPECT_LE(max_abs(cov - MatrixXd::Identity(2, 2)), 0.01);
  EXPECT_LE(mean.cwiseAbs().maxCoeff(), 4.0 * std::sqrt(1.0 / static_cast<double>(n)));
}

TEST(Sample, CorrelatedCovarianceConverges) {
  const std::size_t n = 400'000;
  InstanceGenerator gen(45);
  const SpdMatrix r = gen.spd(3, 1.0);
  const GaussianModel m(r);
  MatrixXd cov = MatrixXd::Zero(3, 3);
  VectorXd mean = VectorXd::Zero(3);
  for (std::size_t i = 0; i < n; ++i) {
    const VectorXd x = m.draw(18, i);
    mean += x;
    cov += x * x.transpose();
  }
  mean /= static_cast<double>(n);
  cov /= static_cast<double>(n);
  const double lmax = r.lambda_max();
  EXPECT_LE(mean.cwiseAbs().maxCoeff(), 4.0 * std::sqrt(lmax / static_cast<double>(n)));
  EXPECT_LE(max_abs(cov - r.matrix()), 6.0 * lmax * std::sqrt(2.0 / static_cast<double>(n)));
}

TEST(Score, MeanZeroUnderModel) {
  InstanceGenerator gen(46);
  const std::size_t n = 100'000;
  for (int k = 0; k < 8; ++k) {
    const std::size_t p = std::vector<std::size_t>{1, 2, 3, 5}[k % 4];
    const SpdMatrix r = gen.spd(p);
    const GaussianModel m(r);
    const DirectionalDerivatives deriv(m, gen.direction(r, 1.0));
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double s = deriv.score(m.draw(100 + k, i));
      sum += s;
      sum_sq += s * s;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) / n);
    EXPECT_LE(std::abs(mean), 4.0 * se) << "p=" << p;
  }
}

}  // namespace

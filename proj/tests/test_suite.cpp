#include <gtest/gtest.h>

#include <set>

#include "fisher_rao/suite.hpp"

namespace {

using namespace fisher_rao;

SuiteSizes small_sizes() {
  SuiteSizes s;
  s.metric_instances = 20;
  s.compatibility_instances = 10;
  s.ode_residual_instances = 5;
  s.endpoint_pairs = 20;
  s.pair_instances = 40;
  s.triangle_triples = 40;
  s.score_pairs = 4;
  s.score_samples = 20'000;
  s.fisher_pairs = 4;
  s.fisher_samples = 50'000;
  s.logdet_instances = 20;
  s.ode_pairs = 8;
  s.ode_steps = 1000;
  s.order_instances = 2;
  s.inverse_fd_instances = 5;
  return s;
}

SuiteConfig small_config(std::vector<std::string> selection) {
  SuiteConfig c;
  c.selection = std::move(selection);
  c.sizes = small_sizes();
  return c;
}

TEST(Suite, EmptyAndNoneSelectNothing) {
  EXPECT_TRUE(run_suite(small_config({})).empty());
  EXPECT_TRUE(run_suite(small_config({"none"})).empty());
}

TEST(Suite, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& c : available_checks()) {
    EXPECT_TRUE(names.insert(c.name).second) << c.name;
    EXPECT_TRUE(c.group == "geometry" || c.group == "gaussian" || c.group == "oracles");
  }
  EXPECT_EQ(names.size(), 15u);
}

TEST(Suite, ValidateRejectsUnknownNamesAndBadDims) {
  EXPECT_THROW(validate(small_config({"no_such_check"})), std::invalid_argument);
  EXPECT_THROW(run_suite(small_config({"geometry", "typo"})), std::invalid_argument);
  auto c = small_config({"all"});
  c.dims = {};
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.dims = {2, 0};
  EXPECT_THROW(validate(c), std::invalid_argument);
  EXPECT_NO_THROW(validate(small_config({"oracles", "forced_values"})));
}

TEST(Suite, SingleCheckSelection) {
  const auto reports = run_suite(small_config({"forced_values"}));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].check_name, "forced_distance_values");
  EXPECT_EQ(reports[1].check_name, "forced_scalar_geodesic");
  EXPECT_TRUE(all_passed(reports));
}

TEST(Suite, GeometryGroupPasses) {
  const auto reports = run_suite(small_config({"geometry"}));
  EXPECT_EQ(reports.size(), 17u);
  for (const auto& r : reports)
    EXPECT_TRUE(r.passed) << r.check_name << ": " << r.residual << " > " << r.tolerance;
}

TEST(Suite, GaussianGroupPasses) {
  auto c = small_config({"gaussian"});
  c.dims = {1, 2, 3, 5, 10};
  const auto reports = run_suite(c);
  EXPECT_EQ(reports.size(), 5u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.check_name << ": " << r.residual << " > " << r.tolerance;
    if (r.check_name != "logdet_consistency") EXPECT_NE(r.details.find("dims=1,2,3,5"), std::string::npos);
  }
}

TEST(Suite, OraclesGroupPasses) {
  const auto reports = run_suite(small_config({"oracles"}));
  EXPECT_EQ(reports.size(), 4u);
  for (const auto& r : reports)
    EXPECT_TRUE(r.passed) << r.check_name << ": " << r.residual << " > " << r.tolerance;
}

TEST(Suite, SampledChecksSkipLargeOnlyDims) {
  auto c = small_config({"score_identity", "logdet_consistency"});
  c.dims = {10};
  const auto reports = run_suite(c);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].check_name, "logdet_consistency");
}

TEST(Suite, DeterministicForFixedSeed) {
  const auto c = small_config({"all"});
  const auto a = run_suite(c);
  const auto b = run_suite(c);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]) << a[i].check_name;
}

TEST(Suite, SeedChangesRandomizedResiduals) {
  auto c = small_config({"distance_pairs"});
  const auto a = run_suite(c);
  c.seed = 43;
  const auto b = run_suite(c);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_TRUE(a[0].seed && b[0].seed);
  EXPECT_NE(*a[0].seed, *b[0].seed);
}

TEST(Suite, OrderFollowsDeclarationNotSelection) {
  const auto reports = run_suite(small_config({"logdet_consistency", "forced_values"}));
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].check_name, "forced_distance_values");
  EXPECT_EQ(reports[2].check_name, "logdet_consistency");
}

}  // namespace

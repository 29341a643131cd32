#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fisher_rao/oracles.hpp"

namespace fisher_rao {

/// Instance counts and sample sizes of the verification suite.
struct SuiteSizes {
  std::size_t metric_instances = 200;
  std::size_t compatibility_instances = 100;
  std::size_t ode_residual_instances = 50;
  std::size_t endpoint_pairs = 200;
  std::size_t pair_instances = 500;  // symmetry, invariances, method agreement
  std::size_t triangle_triples = 500;
  std::size_t score_pairs = 20;
  std::size_t score_samples = 100'000;
  std::size_t fisher_pairs = 20;
  std::size_t fisher_samples = 1'000'000;
  std::size_t logdet_instances = 200;
  std::size_t ode_pairs = 50;
  std::size_t ode_steps = 1000;
  std::size_t order_instances = 5;
  std::size_t inverse_fd_instances = 20;
};

struct SuiteConfig {
  /// Group names ("geometry", "gaussian", "oracles"), check names, "all",
  /// or "none". Empty selects nothing.
  std::vector<std::string> selection = {"all"};
  std::uint64_t seed = 42;
  std::vector<std::size_t> dims = {1, 2, 3, 5, 10};
  SuiteSizes sizes;
};

struct CheckInfo {
  std::string name;
  std::string group;
};

/// Every check in declaration order.
std::vector<CheckInfo> available_checks();

/// Throws std::invalid_argument for a selection entry that names no group
/// or check, and for empty or zero dims.
void validate(const SuiteConfig& config);

/// Runs the selected checks in declaration order. Failures become reports
/// with passed == false; nothing is thrown once the config validates.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace fisher_rao

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fisher_rao/geometry.hpp"

namespace fisher_rao::cli {

enum class Command { distance, geodesic, logmap, expmap, metric, pencil, verify };
enum class OutputFormat { human, structured };

/// Process exit statuses.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int parse_error = 2;
inline constexpr int not_positive_definite = 3;
inline constexpr int dimension_mismatch = 4;
inline constexpr int numerical_failure = 5;
}  // namespace exit_code

inline constexpr std::size_t kDefaultGeodesicSamples = 11;
inline constexpr std::size_t kDefaultFisherSamples = 1'000'000;

struct CliConfig {
  Command command = Command::distance;
  std::vector<std::string> inputs;
  DistanceConvention convention = DistanceConvention::paper;
  DistanceMethod method = DistanceMethod::trace;
  /// geodesic: number of emitted points. verify: Monte Carlo draws.
  std::optional<std::size_t> samples;
  double t0 = 0.0;
  double t1 = 1.0;
  std::uint64_t seed = 42;
  std::vector<std::string> suite = {"all"};
  std::vector<std::size_t> dims = {1, 2, 3, 5, 10};
  OutputFormat format = OutputFormat::human;

  /// Argument list (without program name) that parses back to *this.
  std::vector<std::string> to_args() const;

  bool operator==(const CliConfig&) const = default;
};

struct ParseOutcome {
  std::optional<CliConfig> config;  // empty when parsing stopped
  int exit_status = exit_code::ok;  // meaningful only when config is empty
  std::string message;              // help text or error
};

/// Parses arguments (without the program name). Invalid flags, values and
/// argument counts stop here with exit_code::parse_error.
ParseOutcome parse_args(const std::vector<std::string>& args);

/// Executes a parsed command and returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fisher_rao::cli

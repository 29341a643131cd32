#include "fisher_rao/errors.hpp"

#include <sstream>

namespace fisher_rao {

namespace {

std::string dimension_message(std::size_t expected, std::size_t actual,
                              const std::string& where) {
  std::ostringstream os;
  os << where << ": dimension mismatch (expected " << expected << ", got "
     << actual << ")";
  return os.str();
}

std::string spd_message(double lambda_min, double lambda_max) {
  std::ostringstream os;
  os.precision(17);
  os << "matrix is not positive definite (lambda_min = " << lambda_min
     << ", lambda_max = " << lambda_max << ")";
  return os.str();
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual,
                                     const std::string& where)
    : Error(dimension_message(expected, actual, where)),
      expected_(expected),
      actual_(actual) {}

NotPositiveDefinite::NotPositiveDefinite(double lambda_min, double lambda_max)
    : Error(spd_message(lambda_min, lambda_max)),
      lambda_min_(lambda_min),
      lambda_max_(lambda_max) {}

NotSymmetric::NotSymmetric(double asymmetry, double allowed)
    : Error("matrix is not symmetric (asymmetry " + std::to_string(asymmetry) +
            " exceeds " + std::to_string(allowed) + ")"),
      asymmetry_(asymmetry) {}

LeftCone::LeftCone(std::size_t step, double time)
    : Error("geodesic integration left the SPD cone at step " +
            std::to_string(step) + " (t = " + std::to_string(time) + ")"),
      step_(step),
      time_(time) {}

ParseError::ParseError(std::string source, std::size_t line,
                       const std::string& what)
    : Error(source + ":" + (line == 0 ? std::string("EOF") : std::to_string(line)) +
            ": " + what),
      source_(std::move(source)),
      line_(line) {}

}  // namespace fisher_rao

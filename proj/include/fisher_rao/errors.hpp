#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fisher_rao {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual,
                    const std::string& where);
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Raised when a matrix that must lie in the SPD cone does not.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(double lambda_min, double lambda_max);
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }

 private:
  double lambda_min_;
  double lambda_max_;
};

/// Raw entries too far from symmetric to be floating-point drift.
class NotSymmetric : public Error {
 public:
  NotSymmetric(double asymmetry, double allowed);
  double asymmetry() const { return asymmetry_; }

 private:
  double asymmetry_;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// The geodesic integrator produced a state outside the cone.
class LeftCone : public Error {
 public:
  LeftCone(std::size_t step, double time);
  std::size_t step() const { return step_; }
  double time() const { return time_; }

 private:
  std::size_t step_;
  double time_;
};

/// Malformed matrix text. `line` is 1-based; 0 when the file ended early.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace fisher_rao

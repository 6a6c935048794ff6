#pragma once

#include <stdexcept>
#include <string>

namespace geocontact {

// Bad construction parameters (non-positive radius, unordered ellipsoid radii, ...).
struct InvalidParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation outside a chart's validity box.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chart tangent basis collapsed (|f_u x f_v| below tolerance).
struct DegenerateChartError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sigma(t) too close to zero for the sigma-parameterized equations.
struct SingularProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integration failure; carries the time at which the right-hand side broke down.
struct NumericalError : std::runtime_error {
  double time;
  NumericalError(double t, const std::string& what_arg)
      : std::runtime_error(what_arg + " (at t=" + std::to_string(t) + ")"), time(t) {}
};

// Scenario file could not be parsed; carries the offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what_arg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what_arg), line(line_no) {}
};

// Scenario parsed but failed semantic validation; names the offending field.
struct ValidationError : std::runtime_error {
  std::string field;
  ValidationError(std::string field_name, const std::string& what_arg)
      : std::runtime_error(field_name + ": " + what_arg), field(std::move(field_name)) {}
};

}  // namespace geocontact

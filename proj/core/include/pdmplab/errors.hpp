#pragma once

#include <stdexcept>
#include <string>

namespace pdmplab {

/// A documented precondition was violated by the caller.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure (quadrature, rejection loop, regression) failed to
/// reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested total time cannot accommodate the hybrid TV schedule.
/// The message names the violated validity condition.
class ScheduleInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdmplab

#pragma once

#include <stdexcept>
#include <string>

namespace ahatom {

/// Precondition violations: malformed quantum numbers, configurations,
/// or out-of-range inputs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failures such as unconverged quadrature or a missing root.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ahatom

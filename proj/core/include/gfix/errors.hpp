#pragma once

#include <stdexcept>
#include <string>

namespace gfix {

/// Raised when an operation receives input outside its documented domain
/// (a zero scalar in the sign space, a step size outside [0,1], a coefficient
/// set that breaks a rate-bound precondition, ...). Violations found by the
/// sampled checkers are reported as data, never through this type.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gfix

#pragma once

#include <stdexcept>
#include <string>

namespace torifold {

/// Input describes something other than a labeled simple rational polytope.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file or document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace torifold

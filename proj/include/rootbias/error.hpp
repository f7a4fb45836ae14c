#pragma once

#include <stdexcept>
#include <string>

namespace rootbias {

// Input outside an operation's precondition (bad discriminant, bad level...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The quadratic extension F(sqrt(delta)) is not biquadratic over Q; such
// levels are excluded from the explicit computations.
class UnsupportedExtension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A truncated p-adic computation needed more digits than were carried.
class PrecisionLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not.
class Inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rootbias

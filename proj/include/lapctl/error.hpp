#pragma once

#include <stdexcept>
#include <string>

namespace lapctl {

// Precondition violations on public entry points.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Eigensolver hit its sweep cap or failed its residual check.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-form predictor was asked about an instance outside its
// hypotheses.
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Control vector has support outside the region a predictor covers.
class OutOfSupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lapctl

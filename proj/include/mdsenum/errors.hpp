#pragma once

#include <stdexcept>
#include <string>

namespace mdsenum {

// Malformed or out-of-range input (bad edge list, vertex index past n, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well formed but outside the graph class an enumerator
// supports (claw in a "line graph", girth below 7, ...).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed; always a bug in a generator or the driver.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mdsenum

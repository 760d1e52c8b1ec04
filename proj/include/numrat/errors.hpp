#pragma once

#include <stdexcept>
#include <string>

namespace numrat {

/// Malformed or inconsistent input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but an operation's hypotheses do not hold (exit code 3).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition the library asserts about its own output failed (exit code 1).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace numrat

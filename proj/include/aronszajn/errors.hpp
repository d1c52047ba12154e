#pragma once

#include <stdexcept>

namespace aronszajn {

/// Malformed or out-of-alphabet input: parse failures, unknown labels,
/// reserved identifiers, ill-formed constructors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive procedure refused to run because its input exceeds the
/// configured size guard. Never a silent truncation.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The term mentions a base order with no countable finite truncation (C, C*).
class Unrealizable : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace aronszajn

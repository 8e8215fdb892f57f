#pragma once

#include <stdexcept>
#include <string>

namespace pqech {

/// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 64-bit intermediate would have wrapped around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A closed-form result contradicted its own existence/uniqueness claim.
/// Reaching this means a bug or a false mathematical premise, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pqech

#pragma once

#include <stdexcept>
#include <string>

namespace thresh {

// Caller supplied something outside an operation's domain (CLI exit code 1).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A guarantee that must hold by construction did not (CLI exit code 2).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input text that does not follow one of the file formats.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thresh

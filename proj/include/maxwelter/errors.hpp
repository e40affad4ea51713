#pragma once

#include <stdexcept>
#include <string>

namespace maxwelter {

/// Malformed square lists: empty, duplicated, negative or unparsable.
class InvalidPosition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the hypotheses it is defined for
/// (coin-count scope, theorem hypotheses, terminal positions).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Grundy memo would grow past its configured entry budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked theorem produced a counterexample.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxwelter

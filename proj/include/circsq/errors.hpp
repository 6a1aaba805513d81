#pragma once

#include <stdexcept>
#include <string>

namespace circsq {

// Malformed input data, e.g. an empty word passed to an analysis entry point.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed value outside the operation's accepted range.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation is undefined for the object's current shape (e.g. a disconnected graph).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration exceeded its configured cap.
class SizeExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named hypothesis of a checked statement does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string clause, const std::string& message)
      : std::invalid_argument("precondition '" + clause + "' failed: " + message),
        clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace circsq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdq {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex index does not exist in its host graph.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition (k = 0, empty set, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// gamma_t is undefined: the graph has an isolated vertex.
class IsolatedVertexError : public Error {
 public:
  using Error::Error;
};

// The instance exceeds a guard meant to keep exhaustive work at desk scale.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Complete enumeration would exceed the caller-supplied cap; the caller must
// fail loudly rather than work with a silently truncated list.
class LimitExceededError : public Error {
 public:
  using Error::Error;
};

// A theorem/proposition hypothesis does not hold for the given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// The supplied set is not a minimum total dominating set of the product.
class NotMinimumTdSetError : public Error {
 public:
  using Error::Error;
};

// The graph is in none of F1, F2, F3, so the equality construction is undefined.
class NotInFamiliesError : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 input. `line` is 1-based when parsing from a file, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tdq

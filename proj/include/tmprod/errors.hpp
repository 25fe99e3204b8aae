#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmprod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed factor expression. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on the arguments does not hold (divergent product,
/// excluded parameter, unsupported kind...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Numerical evaluation hit a pole, a nonpositive factor or a division by
/// zero.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Requested more precision than a stored constant carries.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmprod

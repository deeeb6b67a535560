#ifndef FINACT_ERROR_HPP
#define FINACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace finact {

/// Malformed input document. The message carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search or closure exceeded its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace finact

#endif  // FINACT_ERROR_HPP

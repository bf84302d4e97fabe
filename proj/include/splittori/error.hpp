#pragma once

#include <stdexcept>
#include <string>

namespace splittori {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalars, points, directions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the geometric or arithmetic input failed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A simulation exceeded its configured step budget.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace splittori

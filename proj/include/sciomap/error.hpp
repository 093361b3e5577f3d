#pragma once

#include <stdexcept>
#include <string>

namespace sciomap {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input: wrong header, corrupt cache, bad config.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sciomap

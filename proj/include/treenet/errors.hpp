#pragma once

#include <stdexcept>
#include <string>

namespace treenet {

// Base of all library errors. Subclasses exist so callers (notably the CLI)
// can map failure classes to distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor/weight dimension mismatch; the message names the offending dims.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid specification, configuration, or argument value.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Unreadable, corrupt, or unusable input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Training diverged (non-finite loss).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace treenet

#pragma once

#include <stdexcept>
#include <string>

namespace fest {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An index or range lies outside the string it addresses.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A string handle is unknown or was destroyed (e.g. consumed by introduce).
class HandleError : public Error {
 public:
  using Error::Error;
};

// The call is well-formed but not allowed in the current state
// (same-handle introduce, rotate on a linear string, bad involution, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A symbol does not fit the fingerprint field.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Stored tree aggregates disagree with a full recomputation.
class AuditError : public Error {
 public:
  using Error::Error;
};

}  // namespace fest

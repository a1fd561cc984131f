#pragma once

#include <stdexcept>
#include <string>

namespace collatz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (N < 2, x = 0,
/// non-monic divisor, non-positive coefficient, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact certificate did not hold. Either an implementation bug or a
/// counterexample to a proven statement; never swallowed.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure; the message carries the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace collatz

#pragma once

#include <stdexcept>
#include <string>

namespace rmrk {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidConstants : public Error {
 public:
  using Error::Error;
};

class InfeasibleStart : public Error {
 public:
  using Error::Error;
};

class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

// Raised by a solver when an oracle fails in a way the solver cannot recover from.
class OracleFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rmrk

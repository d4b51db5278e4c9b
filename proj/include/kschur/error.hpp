#pragma once

#include <stdexcept>
#include <string>

namespace kschur {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed input (bad level, non-core, bad row set...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Floating-point computation failed to converge or missed its tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured size limit (symbolic k too large, ...).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace kschur

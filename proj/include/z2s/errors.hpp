#pragma once

#include <stdexcept>
#include <string>

namespace z2s {

// Base for every error raised by the library. The CLI maps these to exit
// status 2 (usage) except VerificationError, which maps to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch(int lhs, int rhs)
      : Error("modulus mismatch: s=" + std::to_string(lhs) + " vs s=" + std::to_string(rhs)) {}
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace z2s

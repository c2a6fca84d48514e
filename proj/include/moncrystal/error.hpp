#pragma once

#include <stdexcept>
#include <string>

namespace moncrystal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class NotInRootLattice : public Error {
 public:
  using Error::Error;
};

class NotMinuscule : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when a generation step would exceed its element budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAnElement : public Error {
 public:
  using Error::Error;
};

class CosetMismatch : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain, e.g. a negative weight gap.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (CLI strings, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace moncrystal

#pragma once

#include <stdexcept>
#include <string>

namespace liemorse {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class ComplexTooLarge : public Error {
 public:
  using Error::Error;
};

class MissingDiagonals : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class CompositeModulus : public Error {
 public:
  using Error::Error;
};

class NonzeroDifferential : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace liemorse

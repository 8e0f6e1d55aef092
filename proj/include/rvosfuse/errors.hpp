#pragma once

#include <stdexcept>

namespace rvosfuse {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// RLE counts that do not describe a mask of the declared size.
class MalformedRleError : public Error {
 public:
  using Error::Error;
};

// Operands whose dimensions or shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A non-finite value produced inside a numeric kernel.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Problems with input files: missing, unparsable, inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
};

// Bad command-line flags or configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace rvosfuse

#pragma once

#include <stdexcept>
#include <string>

namespace slocc {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MathError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Counting shape outside the supported pencil / two-row cases.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

/// A step that needs an exact witness only found floating ones.
class NumericOnly : public Error {
 public:
  using Error::Error;
};

}  // namespace slocc

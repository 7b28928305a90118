#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schrodist {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by a series whose constant term is zero or not a rational constant.
class NonInvertibleConstantTerm : public Error {
 public:
  using Error::Error;
};

// Square root of a series whose constant term is not exactly 1.
class BadConstantTerm : public Error {
 public:
  using Error::Error;
};

// Exact polynomial division that leaves a remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotAMonomial : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class InputNotInClass : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownAsset : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested at or beyond the truncation order.
class OrderTooSmall : public Error {
 public:
  using Error::Error;
};

// A formula produced a non-integral coefficient; almost always a
// transcription fault in the formula text.
class NonIntegralCoefficient : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace schrodist

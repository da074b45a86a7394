#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or name-resolution failure. `offset` is a 0-based character offset
/// into the parsed text; line/column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        offset_(offset),
        line_(line),
        column_(column),
        bare_(what) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& bare_message() const { return bare_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::string bare_;
};

/// The Q(t)-kernel of an anchor restricted to a curve has the wrong dimension.
class CurveNotGeneric : public Error {
 public:
  CurveNotGeneric(std::size_t expected, std::size_t actual)
      : Error("curve not generic: kernel dimension over Q(t) is " + std::to_string(actual) +
              ", expected " + std::to_string(expected)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class ZeroPluckerLimit : public Error {
 public:
  ZeroPluckerLimit() : Error("internal: Pluecker vector has no nonzero leading coefficient") {}
};

class MissingStructureFunctions : public Error {
 public:
  explicit MissingStructureFunctions(const std::string& preset)
      : Error("presentation '" + preset + "' has no structure functions") {}
};

class NonFiniteState : public Error {
 public:
  NonFiniteState(double time) : Error("integrator state became non-finite at t=" + std::to_string(time)), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

/// A preset or structure-function table violates one of its defining identities.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hnc

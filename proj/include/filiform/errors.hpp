#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace filiform {

// Base for every error the library raises. Verification failures are not
// errors; they are reported as data (see VerificationReport).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroSpecialization : public Error {
 public:
  ZeroSpecialization() : Error("specialization at t = 0 of a scalar with a pole in t") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NegativeExponent : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column, std::set<std::string> expected = {})
      : Error(Format(message, line, column, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string Format(const std::string& message, int line, int column,
                            const std::set<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
      out += " (expected one of:";
      for (const auto& e : expected) out += " " + e;
      out += ")";
    }
    return out;
  }

  int line_;
  int column_;
  std::set<std::string> expected_;
};

}  // namespace filiform

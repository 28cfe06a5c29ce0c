#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("alphabet mismatch") {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name, std::size_t column = 0, std::size_t line = 0,
                         const std::string& context = {})
      : Error((context.empty() ? std::string{} : context + ": ") + "unknown symbol '" + name + "'" +
              position(line, column)),
        name_(name),
        line_(line),
        column_(column) {}
  const std::string& name() const noexcept { return name_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string position(std::size_t line, std::size_t column) {
    if (!column) return {};
    if (!line) return " at column " + std::to_string(column);
    return " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
  std::string name_;
  std::size_t line_;
  std::size_t column_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        message_(what),
        line_(line),
        column_(column) {}
  /// The message without its position.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class TerminationOrderViolation : public Error {
 public:
  using Error::Error;
};

class UntrustedPresentation : public Error {
 public:
  UntrustedPresentation()
      : Error("presentation is not TRUSTED; run the bialgebra and antipode verification first") {}
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

class GradingViolation : public Error {
 public:
  explicit GradingViolation(std::vector<std::string> witnesses)
      : Error(join(witnesses)), witnesses_(std::move(witnesses)) {}
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  static std::string join(const std::vector<std::string>& ws) {
    std::string s = "grading violated";
    for (const auto& w : ws) s += "\n  " + w;
    return s;
  }
  std::vector<std::string> witnesses_;
};

class SpecInvariantViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfkit

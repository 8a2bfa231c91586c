#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace axcheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A type's tuple space is larger than the universe is willing to enumerate.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string type, std::uint64_t required, std::uint64_t cap)
      : Error("cap exceeded: type " + type + " needs tuple space " +
              std::to_string(required) + " > cap " + std::to_string(cap)),
        type_(std::move(type)),
        required_(required),
        cap_(cap) {}

  const std::string& type() const noexcept { return type_; }
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string type_;
  std::uint64_t required_;
  std::uint64_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::uint32_t line, std::uint32_t column, std::string expected,
             std::string found = {})
      : Error(std::to_string(line) + ":" + std::to_string(column) +
              ": expected " + expected +
              (found.empty() ? std::string{} : ", found " + found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::uint32_t line() const noexcept { return line_; }
  std::uint32_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::uint32_t line_;
  std::uint32_t column_;
  std::string expected_;
};

// A call whose name is neither a variable, a definition, nor a known sugar form.
class UnknownSugar : public ParseError {
 public:
  UnknownSugar(std::uint32_t line, std::uint32_t column, std::string name)
      : ParseError(line, column, "known sugar form or declared name", name),
        name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct TypeDiagnostic {
  std::string message;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
};

class TypeError : public Error {
 public:
  explicit TypeError(std::vector<TypeDiagnostic> diagnostics)
      : Error(render(diagnostics)), diagnostics_(std::move(diagnostics)) {}

  const std::vector<TypeDiagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  static std::string render(const std::vector<TypeDiagnostic>& ds) {
    std::string out = "type error";
    for (const auto& d : ds) {
      out += "\n  " + std::to_string(d.line) + ":" + std::to_string(d.column) +
             ": " + d.message;
    }
    return out;
  }

  std::vector<TypeDiagnostic> diagnostics_;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class NotAModel : public Error {
 public:
  using Error::Error;
};

class SupportNotCovered : public Error {
 public:
  using Error::Error;
};

// Evaluation-time failures that type checking cannot rule out, such as a
// literal naming an individual outside the base domain.
class EvalError : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace axcheck

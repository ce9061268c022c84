#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pryvect {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// CPSL source-level error with position information.
class ParseError : public Error {
public:
  ParseError(int line, int col, std::string expected, std::string msg)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg +
              (expected.empty() ? "" : " (expected " + expected + ")")),
        line_(line), col_(col), expected_(std::move(expected)) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }

private:
  int line_;
  int col_;
  std::string expected_;
};

class TypecheckError : public Error {
public:
  enum class Kind {
    UndeclaredVariable,
    TypeMismatch,
    UnknownEvent,
    UnboundedInt,
    DuplicateVariable,
  };

  TypecheckError(Kind kind, std::string msg) : Error(std::move(msg)), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Malformed binary encoding; offset points at the first offending byte.
class CodecError : public Error {
public:
  CodecError(std::size_t offset, std::string msg)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

// Compilation aborted because the declared variable domains are too large.
class StateSpaceExceeded : public Error {
public:
  StateSpaceExceeded(std::string variable, std::size_t bound)
      : Error("state space exceeds bound " + std::to_string(bound) +
              "; dominated by variable '" + variable + "'"),
        variable_(std::move(variable)), bound_(bound) {}
  const std::string& variable() const { return variable_; }
  std::size_t bound() const { return bound_; }

private:
  std::string variable_;
  std::size_t bound_;
};

class DanglingDangerousEvent : public Error {
public:
  using Error::Error;
};

class CryptoError : public Error {
public:
  enum class Kind { KeyMismatch, LengthMismatch, BadKeySize };
  CryptoError(Kind kind, std::string msg) : Error(std::move(msg)), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class ProtocolError : public Error {
public:
  enum class Kind {
    PhaseViolation,
    TraceTooLong,
    PlaintextSpaceTooSmall,
    MalformedOpening,
    UnexpectedMessage,
    Transport,
  };
  ProtocolError(Kind kind, std::string msg) : Error(std::move(msg)), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class StoreError : public Error {
public:
  enum class Kind { Unauthorized, Failure };
  StoreError(Kind kind, std::string msg) : Error(std::move(msg)), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class ScenarioError : public Error {
public:
  using Error::Error;
};

}  // namespace pryvect

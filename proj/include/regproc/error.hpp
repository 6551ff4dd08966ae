#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regproc {

enum class ErrorKind {
  Parse,
  Format,
  StateLimitExceeded,
  UnsupportedExpression,
  InvalidAutomaton,
  InvalidArgument,
};

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax error in an expression; position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse,
              "syntax error at " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

// Malformed automaton JSON or communication-function file.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what)
      : Error(ErrorKind::Format, what) {}
};

class StateLimitExceeded : public Error {
 public:
  explicit StateLimitExceeded(std::size_t limit)
      : Error(ErrorKind::StateLimitExceeded,
              "state limit of " + std::to_string(limit) + " exceeded"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class UnsupportedExpression : public Error {
 public:
  explicit UnsupportedExpression(const std::string& what)
      : Error(ErrorKind::UnsupportedExpression, what) {}
};

class InvalidAutomaton : public Error {
 public:
  explicit InvalidAutomaton(const std::string& what)
      : Error(ErrorKind::InvalidAutomaton, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::InvalidArgument, what) {}
};

}  // namespace regproc

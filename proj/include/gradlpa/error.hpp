#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradlpa {

enum class ErrorKind {
  // malformed input or arguments
  Parse,
  InvalidArgument,
  UnknownVertex,
  InvalidStep,
  ShapeMismatch,
  EmptyIndexSet,
  IndexOutOfRange,
  // a documented precondition of the operation does not hold
  NotNoExit,
  NotASink,
  VertexNotOnCycle,
  EmptyGraph,
  CycleLimitExceeded,
  WindowExceeded,
  // the operation decided a negative answer
  NotIsomorphic,
  NotRealizable,
  ZeroCorner,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the text parsers. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace gradlpa

#include "gradlpa/error.hpp"

namespace gradlpa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidStep: return "InvalidStep";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNoExit: return "NotNoExit";
    case ErrorKind::NotASink: return "NotASink";
    case ErrorKind::VertexNotOnCycle: return "VertexNotOnCycle";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::CycleLimitExceeded: return "CycleLimitExceeded";
    case ErrorKind::WindowExceeded: return "WindowExceeded";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::ZeroCorner: return "ZeroCorner";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::Parse, std::to_string(line) + ":" +
                                  std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace gradlpa

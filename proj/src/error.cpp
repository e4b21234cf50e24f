#include "densest/error.hpp"

namespace densest {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateInsert: return "DuplicateInsert";
    case ErrorCode::DeleteAbsent: return "DeleteAbsent";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonCanonical: return "NonCanonical";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::AlreadySubtracted: return "AlreadySubtracted";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyStream: return "EmptyStream";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::TurnstileViolation: return "TurnstileViolation";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

StreamError::StreamError(ErrorCode code, std::size_t line, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace densest

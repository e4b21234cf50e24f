#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace densest {

enum class ErrorCode {
  DuplicateInsert,
  DeleteAbsent,
  EmptySubset,
  TooLarge,
  NonCanonical,
  OutOfRange,
  OutOfDomain,
  AlreadySubtracted,
  InvalidConfig,
  InvalidArgument,
  EmptyStream,
  EmptyGraph,
  SyntaxError,
  NodeOutOfRange,
  TurnstileViolation,
  InvalidParams,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised while reading a stream file; line is 1-based (0 when not tied to a line).
class StreamError : public Error {
 public:
  StreamError(ErrorCode code, std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace densest

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twosc {

enum class ErrorCode {
  kInvalidGraph,
  kVertexOutOfRange,
  kEdgeNotPresent,
  kEdgeAlreadyPresent,
  kLoop,
  kTooManyVertices,
  kParse,
  kNotTwoSelfCentered,
  kHasTriangle,
  kTriangleFree,
  kSetOutOfRange,
  kInvalidSpec,
  kEdgeNotInTriangle,
  kNoCriticalEndpoint,
  kBudgetTooSmall,
  kRetryLimitExhausted,
  kOutOfRange,
};

std::string_view to_string(ErrorCode code);

/// Error raised for invalid inputs and violated preconditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed text input; `line` is 1-based, `offset` is the 0-based byte
/// position within that line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line, long offset)
      : Error(ErrorCode::kParse, what), line_(line), offset_(offset) {}

  long line() const noexcept { return line_; }
  long offset() const noexcept { return offset_; }

 private:
  long line_;
  long offset_;
};

}  // namespace twosc

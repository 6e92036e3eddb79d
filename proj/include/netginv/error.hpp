#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netginv {

enum class ErrorCode {
  // structural / validation failures
  Disconnected,
  NegativeConductance,
  SelfLoop,
  ZeroWeight,
  DimensionMismatch,
  IndexOutOfRange,
  DuplicateEdge,
  DuplicateConnection,
  EmptyConnection,
  NotSymmetric,
  InvalidArgument,
  // input text
  ParseError,
  // numerical failures
  SingularH1,
  SingularH2,
  SingularSchur,
  NotKernelVector,
  KernelNotSimple,
  ZeroAlpha,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for the codes that signal a breakdown of a factorization or of a
/// spectral hypothesis rather than bad input.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netginv

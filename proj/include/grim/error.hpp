#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grim {

enum class ErrorCode {
  Syntax,
  UnknownIdentifier,
  RingMismatch,
  ArityMismatch,
  DegreeMismatch,
  CommonZero,
  DependentSections,
  NotGenerating,
  NotSpanning,
  NotOnSecantMinusV,
  InvalidLine,
  ResourceLimit,
  BadInput,
  Io,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure in the library is reported through this type. The code
/// drives CLI exit status and diagnostics; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failures additionally carry the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, const std::string& message, std::size_t position)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace grim

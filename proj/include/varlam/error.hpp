#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varlam {

enum class ErrorCode {
  Parse,
  UnboundName,
  UnexpandedConstant,
  DuplicateDefinition,
  OpenDefinition,
  IndexOutOfRange,
  UnknownFamily,
  UnknownSequence,
  MixedSequenceUse,
  NotANumeral,
  Reduction,
  Io,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Parse,
              "parse error at offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace varlam

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hiergraph {

enum class ErrorCode {
  MismatchedRank,
  NotClosed,
  FamilyMismatch,
  BadParam,
  WindowNotClosed,
  LabelMismatch,
  UnknownLabel,
  TooLarge,
  InsufficientWindow,
  Overflow,
  Parse,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hiergraph

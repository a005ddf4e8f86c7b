#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fiveclass {

enum class ErrorCode {
  NotSymmetric,
  NotUnimodular,
  InvalidForm,
  KindMismatch,
  InvalidElement,
  InvalidExpression,
  StarInSmooth,
  CategoryMismatch,
  NoStandardForm,
  WrongDivisibility,
  ZeroClass,
  NotSupported,
  NonIntegralK,
  RangeExceeded,
  SyntaxError,
  SemanticError,
  ConsistencyFailure,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type. `code()` is the
// machine-readable reason; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Input errors map to CLI exit code 2, consistency failures to 3.
  bool is_consistency_failure() const noexcept {
    return code_ == ErrorCode::ConsistencyFailure ||
           code_ == ErrorCode::NonIntegralK;
  }

 private:
  ErrorCode code_;
};

// Parse failure at a byte offset of the original input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& message)
      : Error(ErrorCode::SyntaxError, message),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace fiveclass

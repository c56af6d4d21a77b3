#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubedet {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  ZeroRowOrColumn,
  InvalidTransform,
  NonIntegralResult,
  DegenerateParams,
  DegenerateRows,
  NotOnCurve,
  SingularPoint,
  InflectionPoint,
  LineOnCurve,
  MissingVariable,
  BoundTooLarge,
  DegenerateCofactors,
  WorkBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. The code is stable and appears in
/// CLI error documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cubedet

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussorder {

enum class ErrorCode {
  NotPrime,
  NotCoprime,
  NotPrimitiveRoot,
  OutOfRange,
  InvalidArgument,
  DivisionByZero,
  ZeroConstant,
  FNotCoprime,
  BadConstant,
  BranchUndefined,
  ZeroElement,
  GuardExceeded,
  CapExceeded,
  WrongRegime,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroConstant: return "ZeroConstant";
    case ErrorCode::FNotCoprime: return "FNotCoprime";
    case ErrorCode::BadConstant: return "BadConstant";
    case ErrorCode::BranchUndefined: return "BranchUndefined";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::WrongRegime: return "WrongRegime";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code; the
/// CLI maps codes onto its exit-status contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaussorder

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galring {

enum class ErrorCode {
  InvalidArgument,
  NonPrime,
  BudgetExceeded,
  ContextMismatch,
  ZeroElement,
  NotAUnit,
  NotTeichmuller,
  WrongType,
  ParamsMismatch,
  TypeMismatch,
  IndexOutOfRange,
  CharacteristicTooSmall,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotTeichmuller: return "NotTeichmuller";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::ParamsMismatch: return "ParamsMismatch";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
  }
  return "Unknown";
}

}  // namespace galring

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgk {

enum class ErrorCode {
  InvalidConfig,
  CriticalGuardBand,
  WrongRegime,
  IndexMismatch,
  PoleOutOfRange,
  OnRealAxis,
  OnCut,
  NearCut,
  ZeroArgument,
  TooClose,
  DegenerateDenominator,
  GridTooCoarse,
  NonConvergence,
  NoConvergence,
  BranchAmbiguity,
};

std::string_view to_string(ErrorCode code);

/// Configuration and regime errors are the caller's fault; everything else is
/// a numerical failure. The CLI maps the two groups to distinct exit codes.
constexpr bool is_numerical_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::CriticalGuardBand:
    case ErrorCode::WrongRegime:
    case ErrorCode::PoleOutOfRange:
    case ErrorCode::OnRealAxis:
    case ErrorCode::OnCut:
    case ErrorCode::NearCut:
    case ErrorCode::ZeroArgument:
    case ErrorCode::TooClose:
      return false;
    default:
      return true;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bgk

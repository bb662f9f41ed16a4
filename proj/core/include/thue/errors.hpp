#pragma once

#include <stdexcept>
#include <string>

namespace thue {

// Error classes map onto CLI exit codes: Parse -> 2, Precondition -> 3,
// PrecisionBudget -> 4.
enum class ErrCode {
  ParseError,
  DegreeTooSmall,
  ZeroLeadingCoefficient,
  RepeatedRoot,
  NotPrime,
  NotIrreducible,
  ZeroY,
  ZeroValue,
  EpsilonOutOfRange,
  UnresolvableBoundary,
  NotRealRoot,
  NotRelated,
  IndexClash,
  RootInput,
  WrongCount,
  InvalidArgument,
  NonConvergence,
};

inline const char* errcode_name(ErrCode code) {
  switch (code) {
    case ErrCode::ParseError: return "ParseError";
    case ErrCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrCode::RepeatedRoot: return "RepeatedRoot";
    case ErrCode::NotPrime: return "NotPrime";
    case ErrCode::NotIrreducible: return "NotIrreducible";
    case ErrCode::ZeroY: return "ZeroY";
    case ErrCode::ZeroValue: return "ZeroValue";
    case ErrCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrCode::UnresolvableBoundary: return "UnresolvableBoundary";
    case ErrCode::NotRealRoot: return "NotRealRoot";
    case ErrCode::NotRelated: return "NotRelated";
    case ErrCode::IndexClash: return "IndexClash";
    case ErrCode::RootInput: return "RootInput";
    case ErrCode::WrongCount: return "WrongCount";
    case ErrCode::InvalidArgument: return "InvalidArgument";
    case ErrCode::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, const std::string& what)
      : std::runtime_error(std::string(errcode_name(code)) + ": " + what), code_(code) {}
  ErrCode code() const { return code_; }

 private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& what) { throw Error(code, what); }

}  // namespace thue

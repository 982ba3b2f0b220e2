#include "thetapairs/error.hpp"

namespace thetapairs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::FactorizationBudget: return "FactorizationBudget";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::EqualRatio: return "EqualRatio";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::InfinitePoint: return "InfinitePoint";
    case ErrorCode::NonPositiveArea: return "NonPositiveArea";
    case ErrorCode::NoSeedFound: return "NoSeedFound";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace thetapairs

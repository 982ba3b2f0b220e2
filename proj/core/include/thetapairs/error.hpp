#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetapairs {

enum class ErrorCode {
  // exact_arith
  NonPrimeModulus,
  ZeroInput,
  NonPositiveInput,
  FactorizationBudget,
  ParseError,
  // curve_model
  AngleOutOfRange,
  NotReduced,
  EqualRatio,
  NotCoprime,
  NotSquarefree,
  SingularCurve,
  // ec_group / birational_maps / valuation_filter
  NotOnCurve,
  ExceptionalPoint,
  DegeneratePoint,
  InfinitePoint,
  NonPositiveArea,
  // pair_generator
  NoSeedFound,
  BudgetExhausted,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure surfaced by the library carries one of the codes above; the
// CLI prints the code name as the diagnostic key.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thetapairs

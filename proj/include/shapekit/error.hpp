#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace shapekit {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  DivisionByInfinitesimal,
  IndeterminateComparison,
  DegenerateOrbit,
  ZeroClass,
  NotFound,
  MultipleMatches,
  EmptyAsymptotics,
  SNotLargeEnough,
  NonPositiveInput,
  InvalidDomain,
  MixedFundamentalDomain,
  LambdaOutsideFundamentalDomain,
  NonIntegerRatio,
  XOutsideFundamentalDomain,
  HypothesisViolated,
  SearchBudgetExceeded,
  TieDetected,
};

const char* code_name(ErrorCode c);

// Every library failure that a caller can act on is an Error; broken
// internal invariants are std::logic_error instead.
class Error : public std::runtime_error {
public:
  using Context = std::map<std::string, std::string>;

  Error(ErrorCode code, const std::string& message, Context context = {});

  ErrorCode code() const { return code_; }
  const Context& context() const { return context_; }

private:
  ErrorCode code_;
  Context context_;
};

}  // namespace shapekit

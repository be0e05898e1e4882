#include "shapekit/error.hpp"

namespace shapekit {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByInfinitesimal: return "DivisionByInfinitesimal";
    case ErrorCode::IndeterminateComparison: return "IndeterminateComparison";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MultipleMatches: return "MultipleMatches";
    case ErrorCode::EmptyAsymptotics: return "EmptyAsymptotics";
    case ErrorCode::SNotLargeEnough: return "SNotLargeEnough";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::MixedFundamentalDomain: return "MixedFundamentalDomain";
    case ErrorCode::LambdaOutsideFundamentalDomain: return "LambdaOutsideFundamentalDomain";
    case ErrorCode::NonIntegerRatio: return "NonIntegerRatio";
    case ErrorCode::XOutsideFundamentalDomain: return "XOutsideFundamentalDomain";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::TieDetected: return "TieDetected";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, Context context)
    : std::runtime_error(message), code_(code), context_(std::move(context)) {}

}  // namespace shapekit

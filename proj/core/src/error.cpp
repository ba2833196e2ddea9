#include "codelattice/error.hpp"

namespace codelattice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kRankTooLarge: return "RankTooLarge";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kZeroRank: return "ZeroRank";
    case ErrorCode::kNotATower: return "NotATower";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kTowerViolation: return "TowerViolation";
    case ErrorCode::kWeightViolation: return "WeightViolation";
    case ErrorCode::kNotFullRank: return "NotFullRank";
    case ErrorCode::kQuotientTooLarge: return "QuotientTooLarge";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kUnsupportedLattice: return "UnsupportedLattice";
    case ErrorCode::kHypothesesFail: return "HypothesesFail";
    case ErrorCode::kEnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace codelattice

#include "error.hpp"

namespace crosscap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexError";
    case ErrorCode::BadTwistSupport: return "BadTwistSupport";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::RowSumViolation: return "RowSumViolation";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::BadBoundaryColumn: return "BadBoundaryColumn";
    case ErrorCode::RelationNotPreserved: return "RelationNotPreserved";
    case ErrorCode::NonAutomorphism: return "NonAutomorphism";
    case ErrorCode::InconsistentSinglePuncture: return "InconsistentSinglePuncture";
    case ErrorCode::QuotientNotUnimodular: return "QuotientNotUnimodular";
    case ErrorCode::TwistHasNoIntegerMatrix: return "TwistHasNoIntegerMatrix";
    case ErrorCode::NotKernel: return "NotKernel";
    case ErrorCode::NotResidual: return "NotResidual";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool Error::is_validation() const noexcept {
  switch (code_) {
    case ErrorCode::RowSumViolation:
    case ErrorCode::NonUnimodular:
    case ErrorCode::BadBoundaryColumn:
    case ErrorCode::RelationNotPreserved:
    case ErrorCode::NonAutomorphism:
    case ErrorCode::InconsistentSinglePuncture:
    case ErrorCode::QuotientNotUnimodular:
    case ErrorCode::NotKernel:
    case ErrorCode::NotResidual:
    case ErrorCode::NotOrthogonal:
      return true;
    default:
      return false;
  }
}

void throw_invariant(const std::string& what) {
  throw Error(ErrorCode::InternalInvariant, "internal invariant violated: " + what);
}

}  // namespace crosscap

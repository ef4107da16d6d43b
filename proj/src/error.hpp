#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscap {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  IndexOutOfRange,
  BadTwistSupport,
  NotOrthogonal,
  RowSumViolation,
  NonUnimodular,
  BadBoundaryColumn,
  RelationNotPreserved,
  NonAutomorphism,
  InconsistentSinglePuncture,
  QuotientNotUnimodular,
  TwistHasNoIntegerMatrix,
  NotKernel,
  NotResidual,
  ResourceLimit,
  ParseError,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above. The
// validation codes (RowSumViolation .. QuotientNotUnimodular) name the
// invariant the input broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_validation() const noexcept;

 private:
  ErrorCode code_;
};

[[noreturn]] void throw_invariant(const std::string& what);

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw_invariant(what);
}

}  // namespace crosscap

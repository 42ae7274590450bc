#ifndef TROPMIRROR_CORE_ERRORS_HPP
#define TROPMIRROR_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropmirror {

enum class ErrorCode {
  // input shape
  Schema,
  DimensionMismatch,
  // mathematical preconditions
  NotFullDimensional,
  OriginNotInterior,
  NotFano,
  Unbounded,
  NotCartier,
  NotEquidimensional,
  UnboundedCandidatePolytope,
  InvalidNefPartition,
  EmptySupport,
  UnboundedSlice,
  SphereCheckFailed,
  NoCartierMultiple,
  // internal consistency
  NotFaceOfDelta,
  FormsDisagree,
  TropicalTestsDisagree,
  DualityMismatch,
};

const char* error_name(ErrorCode code);

/// 2 for schema errors, 4 for internal consistency failures, 3 otherwise.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the error name.
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_ERRORS_HPP

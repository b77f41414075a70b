#pragma once

#include <stdexcept>
#include <string>

namespace regcyc {

enum class ErrorCode {
  kLoopArc,
  kDuplicateArc,
  kVertexOutOfRange,
  kInvalidArgument,
  kOverlappingSets,
  kEmptySet,
  kNotRegular,
  kNotDense,
  kCapExceeded,
  kBudgetExceeded,
  kNoMajorityComponent,
  kUnverifiedCertificate,
  kParse,
  kSoundness,
};

const char* to_string(ErrorCode code);

/// Every failure the library reports. The code distinguishes caller
/// mistakes (bad input) from soundness failures, which mean a proven
/// statement was contradicted by an exact computation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace regcyc

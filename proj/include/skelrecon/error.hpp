#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skelrecon {

enum class ErrorCode {
  ParseError,
  InvalidSpec,
  NotGraded,
  RankOutOfRange,
  DegreeBelowDimension,
  TooLarge,
  DimensionTooSmall,
  InvalidBase,
  NotAProperFace,
  CutFacetMissing,
  KindMismatch,
  FrameNotInUniqueTwoFace,
  NonSimpleRoot,
  NotASkeleton,
  NoCoverFound,
  CertificateMismatch,
  EmptyFamily,
  InconsistentCounts,
  RepairAmbiguous,
  PreconditionViolated,
};

std::string_view to_string(ErrorCode code);

// All library failures carry a code so callers (and the CLI) can branch on
// the failure kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skelrecon

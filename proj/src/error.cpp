#include "skelrecon/error.hpp"

namespace skelrecon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::DegreeBelowDimension: return "DegreeBelowDimension";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::NotAProperFace: return "NotAProperFace";
    case ErrorCode::CutFacetMissing: return "CutFacetMissing";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::FrameNotInUniqueTwoFace: return "FrameNotInUniqueTwoFace";
    case ErrorCode::NonSimpleRoot: return "NonSimpleRoot";
    case ErrorCode::NotASkeleton: return "NotASkeleton";
    case ErrorCode::NoCoverFound: return "NoCoverFound";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::RepairAmbiguous: return "RepairAmbiguous";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace skelrecon

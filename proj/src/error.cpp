#include "plingam/error.hpp"

namespace plingam {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::SingularDesign: return "SingularDesign";
    case ErrorCode::InsufficientRows: return "InsufficientRows";
    case ErrorCode::UnstableSystem: return "UnstableSystem";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidFlags: return "InvalidFlags";
    case ErrorCode::EmptyAfterPreprocessing: return "EmptyAfterPreprocessing";
  }
  return "Unknown";
}

}  // namespace plingam

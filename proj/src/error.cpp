#include "ccc/error.hpp"

namespace ccc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::TiesPresent: return "TiesPresent";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::POutOfRange: return "POutOfRange";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::TooFewReplicates: return "TooFewReplicates";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::ModelNotFullySpecified: return "ModelNotFullySpecified";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::WriteError: return "WriteError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ccc

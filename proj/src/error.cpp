#include "topolab/error.hpp"

namespace topolab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::NotPiCompatible: return "NotPiCompatible";
    case ErrorCode::NotOpen: return "NotOpen";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NOutOfRange: return "NOutOfRange";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyBase: return "EmptyBase";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace topolab

#include "a5zp/error.hpp"

namespace a5zp {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNotPrime: return "not-prime";
    case ErrorCode::kModulus: return "modulus";
    case ErrorCode::kModulusMismatch: return "modulus-mismatch";
    case ErrorCode::kUnknownLetter: return "unknown-letter";
    case ErrorCode::kInvalidPrefix: return "invalid-prefix";
    case ErrorCode::kNotGenerating: return "not-generating";
    case ErrorCode::kNotMinimal: return "not-minimal";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kZeroVoltage: return "zero-voltage";
    case ErrorCode::kCriterionInapplicable: return "criterion-inapplicable";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kVerification: return "verification";
    case ErrorCode::kTooLarge: return "too-large";
  }
  return "unknown";
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(ErrorCode::kParse,
            message + " (at offset " + std::to_string(position) + ")"),
      position_(position),
      detail_(message) {}

}  // namespace a5zp

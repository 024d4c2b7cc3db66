#ifndef A5ZP_ERROR_HPP_
#define A5ZP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a5zp {

enum class ErrorCode {
  kParse,
  kInvalidArgument,
  kNotPrime,
  kModulus,
  kModulusMismatch,
  kUnknownLetter,
  kInvalidPrefix,
  kNotGenerating,
  kNotMinimal,
  kPrecondition,
  kZeroVoltage,
  kCriterionInapplicable,
  kNotFound,
  kVerification,
  kTooLarge,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. Verdict-style checks
// (Hamiltonicity, witness verification) return reports instead of throwing.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  // Zero-based offset into the parsed text.
  std::size_t position() const { return position_; }
  // The message without the offset suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace a5zp

#endif  // A5ZP_ERROR_HPP_

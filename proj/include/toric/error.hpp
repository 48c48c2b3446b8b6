#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
  TwistMismatch,
  ZeroFunction,
  EvalAtSingularity,
  DegenerateCurve,
  IllConditionedRoot,
  NonIncreasingExponents,
  NotAPole,
  NotPurePowerForm,
  GammaOutOfRange,
  BasepointIsPole,
  ComplexResidue,
  DuplicateLambda,
  ZeroLambda,
  NonPositiveGram,
  UnrepresentableTwist,
  NumericFailure,
  InvalidInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric

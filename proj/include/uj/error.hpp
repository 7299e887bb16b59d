#pragma once

#include <stdexcept>
#include <string>

namespace uj {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  SpectrumOutOfRange,
  NotProjector,
  NotDensityMatrix,
  NotEffect,
  InvalidLambda,
  InvalidBlochVector,
  DimensionMismatch,
  OddDimension,
  LambdaTooLarge,
  InvalidBox,
  InvalidDistribution,
  NonConvergence,
  ParseError,
  ValidationError,
  InvalidArgument,
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

}  // namespace uj

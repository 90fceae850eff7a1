#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtorus {

enum class ErrorCode {
  NonSquareMatrix,
  DimensionMismatch,
  ImageNotInKernel,
  NonInvertibleMonodromy,
  BadGeneratorIndex,
  RelationViolated,
  NonUnimodular,
  UnsupportedGenus,
  ShapeMismatch,
  NotACocycle,
  NotInKernel,
  NotInvariant,
  BadComponent,
  InvalidRefinement,
  MalformedFraction,
  BadSpec,
  TooManyComponents,
  OracleDisagreement,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qtorus

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieframe {

enum class ErrorCode {
  // input validation
  InvalidArgument,
  InvalidGrid,
  FrameNotOrthonormal,
  TangentNotUnit,
  ShapeMismatch,
  SyntaxError,
  UnknownIdentifier,
  DomainError,
  ExpressionDomainError,
  ConfigNotFound,
  InvalidConfig,
  // degenerate geometry
  NonPositiveCurvature,
  HelicalDegenerate,
  PlanarDegenerate,
  SingularOffset,
  DegenerateCurve,
};

/// Stable snake_case name used in machine-readable error output.
std::string_view error_code_name(ErrorCode code);

/// True for codes that describe degenerate geometry rather than bad input.
bool is_geometry_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lieframe

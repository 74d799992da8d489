#include "lieframe/error.hpp"

namespace lieframe {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InvalidGrid: return "invalid_grid";
    case ErrorCode::FrameNotOrthonormal: return "frame_not_orthonormal";
    case ErrorCode::TangentNotUnit: return "tangent_not_unit";
    case ErrorCode::ShapeMismatch: return "shape_mismatch";
    case ErrorCode::SyntaxError: return "syntax_error";
    case ErrorCode::UnknownIdentifier: return "unknown_identifier";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::ExpressionDomainError: return "expression_domain_error";
    case ErrorCode::ConfigNotFound: return "config_not_found";
    case ErrorCode::InvalidConfig: return "invalid_config";
    case ErrorCode::NonPositiveCurvature: return "non_positive_curvature";
    case ErrorCode::HelicalDegenerate: return "helical_degenerate";
    case ErrorCode::PlanarDegenerate: return "planar_degenerate";
    case ErrorCode::SingularOffset: return "singular_offset";
    case ErrorCode::DegenerateCurve: return "degenerate_curve";
  }
  return "unknown";
}

bool is_geometry_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveCurvature:
    case ErrorCode::HelicalDegenerate:
    case ErrorCode::PlanarDegenerate:
    case ErrorCode::SingularOffset:
    case ErrorCode::DegenerateCurve:
      return true;
    default:
      return false;
  }
}

}  // namespace lieframe

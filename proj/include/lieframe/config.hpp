#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lieframe/frenet.hpp"
#include "lieframe/verify.hpp"

namespace lieframe {

/// Expected classification outcomes attached to regression inputs.
struct Expectation {
  std::optional<bool> planar;
  std::optional<bool> general_helix;
  std::optional<bool> slant_helix;
  std::optional<bool> is_pair;
};

struct RunConfig {
  std::string structure_name{"abelian"};  ///< preset name, or "custom" for an explicit tau_G
  LieStructure structure;
  std::string kappa_expr;
  std::string tau_expr;
  double s0{0.0};
  double s1{1.0};
  std::size_t samples{2001};
  Frame initial_frame;
  int epsilon{1};
  ToleranceProfile tolerances;
  std::optional<std::string> output_path;
  std::optional<std::string> output_format;
  std::optional<Expectation> expect;
};

/// Throws Error(ConfigNotFound) if the file cannot be opened and
/// Error(InvalidConfig) on malformed JSON or schema violations.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view json_text);

/// Parses both expressions and builds the grid. Expression errors keep their
/// own codes (SyntaxError, UnknownIdentifier).
CurveSpec make_curve_spec(const RunConfig& config);

/// Compiles an expression into a callable of s.
ScalarFunction compile_expression(std::string_view text);

}  // namespace lieframe

#pragma once

#include <ostream>

namespace lieframe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitGeometry = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs one CLI invocation. Errors are written to `err` as
/// {"error":{"code":...,"message":...}}.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieframe

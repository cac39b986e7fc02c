#pragma once

#include <iosfwd>

namespace derivar {

inline constexpr const char* kToolName = "derivar";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Runs one CLI invocation. Writes the result document to `out` and
/// diagnostics to `err`. Exit codes: 0 success / verified, 1 mathematical
/// failure (a check or crosscheck came back negative), 2 usage or parse
/// errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace derivar

#pragma once

#include <iosfwd>

namespace riesz::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNumericalBreakdown = 2 };

/// Runs one `walk` subcommand. Records go to `out` (or the --out file),
/// diagnostics to `err`.
int execute(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace riesz::cli

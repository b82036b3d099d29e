#pragma once

#include <iosfwd>

namespace sparsecenter::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kInternalError = 3,
};

/// Runs the command line `argv[0] <subcommand> ...`. Data goes to `out` (or
/// to the --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsecenter::cli

#pragma once

#include <ostream>

namespace zaremba::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_numerical = 3,
};

/// Entry point of the `zaremba` tool; writes results to `out` and
/// diagnostics to `err`, returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace zaremba::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kspec::cli {

/// Full CLI entry point with injected streams (testable without a process).
/// out receives the primary output, err the diagnostics. Returns the process
/// exit code: 0 all checks passed, 1 some check failed, 2 usage/input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kspec::cli

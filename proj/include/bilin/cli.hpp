#pragma once

#include <ostream>

namespace bilin {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitInvalidFlags = 2,
    kExitBudget = 3,
    kExitFailure = 4,
};

/// Entry point of the bilincensus tool. Data goes to out, diagnostics to err.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bilin

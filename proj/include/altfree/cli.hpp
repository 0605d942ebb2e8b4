#pragma once

#include <string>
#include <vector>

namespace altfree {

/// Exit codes are the machine contract:
///   0 claim holds / object found
///   1 claim fails / none
///   2 usage or I/O error
///   3 search budget exhausted
struct CommandResult {
    int exit_code = 0;
    std::string output;       // stdout payload, fully rendered
    std::string diagnostics;  // stderr payload (errors, notes)
};

/// Dispatches one CLI invocation (argv without the program name).
/// Deterministic output for fixed input, flags, and budgets; never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace altfree

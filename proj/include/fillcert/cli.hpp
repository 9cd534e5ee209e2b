#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fillcert {

// Process exit codes. Verdict codes match the aggregate verdict of the
// requested check; 64/65 follow the BSD sysexits convention.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUncertain = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;

// Runs the command line tool on the given arguments (argv without the
// program name), writing the report to out and diagnostics to err.
// Returns the process exit code; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fillcert

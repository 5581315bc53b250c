#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pentagon {

/// Exit codes: 0 success, 1 a requested check failed, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pentagon

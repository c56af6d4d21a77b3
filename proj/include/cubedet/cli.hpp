#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubedet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Payloads go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubedet::cli

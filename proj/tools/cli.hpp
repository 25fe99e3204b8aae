#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmprod::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMath = 3;

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or to --output) and diagnostics to `err`. Returns the exit code:
/// 0 success, 2 usage or parse error, 3 mathematical precondition or
/// verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmprod::cli

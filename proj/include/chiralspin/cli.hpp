#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chiralspin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name) and returns the exit
/// code: 0 success/verified, 1 clean negative result, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chiralspin::cli

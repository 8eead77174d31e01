#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl3::cli

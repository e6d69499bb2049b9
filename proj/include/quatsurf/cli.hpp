#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quatsurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Results go to files
/// named by --out, or to `out`; errors go to `err` as {"error", "message"}
/// JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatsurf::cli

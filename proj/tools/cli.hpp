#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circsq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// Parses args (without the program name), runs one subcommand and writes
// its output. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circsq::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dtriple::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a claimed property or identity does not hold
inline constexpr int kExitUsage = 2;   // malformed arguments or violated preconditions

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtriple::cli

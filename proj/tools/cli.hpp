#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unifd::cli {

/// Exit status: 0 success, 2 bad arguments or violated preconditions,
/// 1 computation failures (and oracle mismatches).
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unifd::cli

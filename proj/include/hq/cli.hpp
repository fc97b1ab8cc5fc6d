#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hq::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;         // bad arguments, unreadable or malformed input
inline constexpr int kInconsistent = 2;  // data admits no solution, or verification failed
inline constexpr int kInternal = 3;

// Runs the tool on args (without the program name), writing to out / err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hq::cli

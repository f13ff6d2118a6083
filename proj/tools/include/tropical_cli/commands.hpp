#pragma once

// Command-line front end. Exit codes: 0 ok, 1 semantic failure (rank-one
// violation, point OUT, failed property), 2 usage or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace tropical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli

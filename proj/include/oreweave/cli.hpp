#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oreweave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or runtime error
inline constexpr int kExitUsage = 2;

// Runs one oreweave command. args excludes the program name. Results go to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oreweave::cli

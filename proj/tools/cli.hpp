#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ceqss/gf.hpp"

namespace ceqss::cli {

inline constexpr u64 kDefaultSeed = 0xCE955;

// Runs one invocation (args exclude the program name).
// Exit codes: 0 success, 1 failed verification/operation, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ceqss::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace compat::cli {

// Exit codes shared by the decision subcommands.
inline constexpr int kCompatible = 0;
inline constexpr int kNone = 1;
inline constexpr int kInputError = 2;

// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compat::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob {

// Exit codes: 0 success, 1 domain error, 2 budget/resource error, 64 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;

// Dispatches one subcommand; args excludes the program name.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace frob

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wbal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitNegative = 2; // infeasible, or invariant violated
inline constexpr int kExitUsage = 64;

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace wbal

#ifndef HULLVOL_TOOLS_APP_HPP
#define HULLVOL_TOOLS_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hullvol::cli {

// Exit codes: the outcome of the experiment, not just of the program.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hullvol::cli

#endif  // HULLVOL_TOOLS_APP_HPP

#ifndef CAYLEY_CLI_HPP
#define CAYLEY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs the command line `args` (without the program name) and returns the
/// process exit code: 0 pass, 1 usage or configuration error, 2 failed check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley

#endif  // CAYLEY_CLI_HPP

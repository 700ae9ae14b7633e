#ifndef CIRCDIV_CLI_HPP
#define CIRCDIV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace circdiv {

/// Exit codes: 0 success, 1 usage error, 2 domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command line (`args` excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circdiv

#endif  // CIRCDIV_CLI_HPP

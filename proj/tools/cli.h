#ifndef POSETVAL_TOOLS_CLI_H_
#define POSETVAL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace posetval::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectationFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (without the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetval::cli

#endif  // POSETVAL_TOOLS_CLI_H_

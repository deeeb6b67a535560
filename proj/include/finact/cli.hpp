#ifndef FINACT_CLI_HPP
#define FINACT_CLI_HPP

#include <ostream>

namespace finact {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,
};

/// Entry point of the `finact` tool; writes results to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finact

#endif  // FINACT_CLI_HPP

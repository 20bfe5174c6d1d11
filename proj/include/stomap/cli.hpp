#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stomap {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,         // check-equal: not equal; verify-relations: a failure; other errors
  kExitParse = 2,         // malformed expression, matrix document or command line
  kExitArity = 3,         // strand-count mismatch, bad input index, nothing to sample
  kExitNotStochastic = 4, // matrix document is not column-stochastic
  kExitInvalidRedex = 5,  // rewrite position does not match
};

/// Runs one command line (without the program name). Machine-readable
/// results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stomap

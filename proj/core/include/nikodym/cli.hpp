#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nikodym {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,         // well-formed run whose checks failed, or nothing found
  kExitUsage = 2,        // bad flags or parameters, unwritable output
  kExitConsistency = 3,  // a premise of the exact computation was violated
};

/// Entry point behind the `nikodym` binary. Subcommands: generate, verify,
/// min-n, render, sweep. Documents go to `out` (or --out), messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3..41" (every odd n in range) or "3,5,9".
std::vector<int> parse_n_list(const std::string& text);

}  // namespace nikodym

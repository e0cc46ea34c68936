// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vicyl {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,            // success / predicate holds
  kExitInputError = 1,    // parse or validation failure
  kExitIterationCap = 2,  // solver stopped on the iteration budget
  kExitPredicateFail = 3  // requested predicate (or membership) does not hold
};

/// Runs the command line given argv-style arguments (without the program
/// name). All data output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vicyl

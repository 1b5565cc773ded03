#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tpca/error.hpp"

namespace tpca::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadArguments = 2,
  kExitIoFailure = 3,
  kExitNumericalFailure = 4,
};

/// Exit code a library error maps to.
int exit_code_for(Errc code) noexcept;

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Regular output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpca::cli

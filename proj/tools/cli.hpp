// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pt3::cli {

enum ExitCode : int {
    kOk = 0,
    kArgumentError = 2,
    kConvergenceError = 3,
    kOracleFailure = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats with 12 significant digits, locale independent.
std::string format_number(double value);

}  // namespace pt3::cli

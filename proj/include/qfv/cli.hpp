#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfv {

enum ExitCode : int {
    kOk = 0,
    kMalformedInput = 1,
    kIncompatible = 2,
    kResourceGuard = 3,
    kOracleMismatch = 4,
};

/// Runs the qfv command line; args excludes the program name. Results go to
/// out (or --output FILE), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfv

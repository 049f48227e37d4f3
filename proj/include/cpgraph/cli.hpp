#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpgraph::cli {

enum ExitCode : int {
    kSuccess = 0,
    kParseError = 1,
    kGraphError = 2,
    kCapExhausted = 3,
    kInvariantViolation = 4,
};

/// Runs the command line (args excludes the program name) and returns the
/// process exit code. Caps come from --cap-* flags, then CPGRAPH_CAP_*
/// environment variables, then library defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cpgraph::cli

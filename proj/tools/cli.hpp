#ifndef AFFSTR_TOOLS_CLI_HPP
#define AFFSTR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace affstr::cli {

enum ExitCode : int {
    ok = 0,
    config_error = 2,
    consistency_failure = 3,
};

/// Runs one command line (args exclude the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace affstr::cli

#endif

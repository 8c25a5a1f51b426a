#ifndef VVMOD_CLI_HPP
#define VVMOD_CLI_HPP

#include <string>
#include <vector>

namespace vvmod {

/// Captured outcome of one tool invocation.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Run the command-line tool on args (program name excluded).
/// Exit codes: 0 success, 1 failed verification checks, 2 usage error,
/// 3 domain error from the underlying computation.
CliResult cli_main(const std::vector<std::string>& args);

} // namespace vvmod

#endif

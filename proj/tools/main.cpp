#include <cstdio>
#include <string>
#include <vector>

#include "vvmod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    vvmod::CliResult r = vvmod::cli_main(args);
    std::fputs(r.out.c_str(), stdout);
    std::fputs(r.err.c_str(), stderr);
    return r.exit_code;
}

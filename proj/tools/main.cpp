#include <cstdio>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pelltriples::cli::CommandResult result = pelltriples::cli::run(args);
    if (!result.payload.empty()) std::fwrite(result.payload.data(), 1, result.payload.size(), stdout);
    if (!result.diagnostics.empty())
        std::fwrite(result.diagnostics.data(), 1, result.diagnostics.size(), stderr);
    return pelltriples::cli::exit_code(result.status);
}

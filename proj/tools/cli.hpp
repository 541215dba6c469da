#pragma once

#include <string>
#include <vector>

namespace pelltriples::cli {

enum class Status { ok, invalid, error };

struct CommandResult {
    Status status = Status::ok;
    std::string payload;      // written to stdout
    std::string diagnostics;  // written to stderr
};

int exit_code(Status status);

// Dispatch a full command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

}  // namespace pelltriples::cli

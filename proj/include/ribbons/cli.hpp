#pragma once

#include <string>
#include <vector>

namespace ribbons {

struct CommandResult {
    int code = 0;
    std::string out;
    std::string err;
};

// Full command-line entry point, argv without the program name. File
// arguments equal to "-" read from stdin_data. Exit codes: 0 success,
// 1 failed verification, 2 usage or parse error, 3 resource bound.
CommandResult run_cli(const std::vector<std::string>& args,
                      const std::string& stdin_data = "");

} // namespace ribbons

#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace nsbin::testing {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the CLI with `args` through the shell; stderr is merged unless `merge_stderr` is false.
inline CliResult run_cli(const std::string& args, bool merge_stderr = true)
{
    const std::string command =
        std::string("\"") + NSBIN_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace nsbin::testing

#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

struct CliRun {
    std::string out;
    int code = -1;
};

// Runs the CLI with the given argument string; stderr is dropped unless keep_stderr.
inline CliRun run_cli(const std::string& args, bool keep_stderr = false) {
    const std::string cmd = std::string("\"") + CARLEMAN_CLI_PATH + "\" " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

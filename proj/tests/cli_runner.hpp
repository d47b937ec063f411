#pragma once

// Runs the CLI binary (path injected via SPINIM_CLI_PATH) and captures exit
// code and stdout. POSIX-only, which matches the CI targets.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace spinim::testing {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SPINIM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Writes content to a unique temp file and returns its path.
inline std::string write_temp_file(const std::string& stem, const std::string& content) {
    static int counter = 0;
    const std::string path = "/tmp/spinim_test_" + std::to_string(getpid()) + "_" + stem +
                             "_" + std::to_string(counter++) + ".json";
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace spinim::testing

#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace blp::testing {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline std::string cli_path() {
  if (const char* env = std::getenv("BLP_CLI")) return env;
  return "./tools/blp";
}

inline std::string fixture_dir() {
  if (const char* env = std::getenv("BLP_DATA")) return env;
  return "../data";
}

/// Runs the CLI with the given argument string, capturing stdout.
inline RunResult run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace blp::testing

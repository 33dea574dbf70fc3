#pragma once

// Helpers for driving the command-line binary from tests.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace auctionsim::testing {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline std::string cli_binary() {
  if (const char* env = std::getenv("AUCTIONSIM_BIN")) return env;
#ifdef AUCTIONSIM_BIN
  return AUCTIONSIM_BIN;
#else
  return "./auctionsim";
#endif
}

inline CliResult run_cli(const std::string& args) {
  const std::string command = cli_binary() + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = status >= 256 ? status / 256 : status;  // WEXITSTATUS without <sys/wait.h>
  return result;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace auctionsim::testing

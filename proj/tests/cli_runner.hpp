#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Spawns the command-line binary and captures exit code and output.
// Paths come from compile definitions set by the build.
namespace cli_runner {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string temp_path(const std::string& tag) {
  static int counter = 0;
  return "/tmp/wordhopf_test_" + std::to_string(getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

inline RunResult run_cli(const std::string& args) {
  RunResult result;
  const std::string out_path = temp_path("stdout");
  const std::string err_path = temp_path("stderr");
  const std::string command = std::string(WORDHOPF_CLI_PATH) + " " + args +
                              " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  result.exit_code = WEXITSTATUS(status);
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

inline std::string golden(const std::string& name) {
  return std::string(WORDHOPF_GOLDEN_DIR) + "/" + name;
}

}  // namespace cli_runner

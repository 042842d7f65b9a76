#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kdrift {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
  bool timed_out = false;
};

struct ProcessOptions {
  std::optional<std::filesystem::path> cwd;
  std::optional<std::chrono::milliseconds> timeout;
  std::vector<std::string> extra_env;  // NAME=value entries appended to the inherited environment
};

/// Looks `program` up on PATH the way execvp would; absolute or relative paths
/// are checked directly.
bool program_exists(const std::string& program);

/// Runs argv[0] with arguments, capturing stdout and stderr. Throws
/// Error(executor_unavailable) when the program cannot be found. A timeout
/// kills the child and sets `timed_out`; it does not throw.
ProcessResult run_process(const std::vector<std::string>& argv, const ProcessOptions& options = {});

/// Splits a command template on whitespace, honouring single and double quotes.
std::vector<std::string> split_command(const std::string& command);

}  // namespace kdrift

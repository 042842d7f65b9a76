#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kdrift/process.hpp"
#include "kdrift/text.hpp"

namespace kdrift::testing {

inline std::filesystem::path fixture_dir() { return KDRIFT_FIXTURE_DIR; }

/// Every regular file under `root`, keyed by its path relative to `root`.
inline std::map<std::string, std::string> read_tree(const std::filesystem::path& root) {
  std::map<std::string, std::string> out;
  if (!std::filesystem::exists(root)) return out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[std::filesystem::relative(e.path(), root).generic_string()] = read_file(e.path());
  }
  return out;
}

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("kdrift-" + tag + "-" + std::to_string(rd()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Builds the mining fixture repository at `dest` and returns the script's
/// summary of the planted history.
inline nlohmann::json make_fixture_repo(const std::filesystem::path& dest) {
  auto r = run_process({"bash", (fixture_dir() / "repo" / "make_repo.sh").string(), dest.string()});
  if (r.exit_code != 0) throw std::runtime_error("make_repo.sh failed: " + r.err);
  return nlohmann::json::parse(r.out);
}

}  // namespace kdrift::testing

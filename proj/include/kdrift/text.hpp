#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kdrift {

/// A file body as a list of lines plus whether the last line was terminated.
/// The empty text is zero lines with a terminating newline.
struct LineBuffer {
  std::vector<std::string> lines;
  bool final_newline = true;

  static LineBuffer from_text(std::string_view text);
  std::string to_text() const;

  friend bool operator==(const LineBuffer&, const LineBuffer&) = default;
};

std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view s) noexcept;
std::string_view trim_right(std::string_view s) noexcept;
bool starts_with(std::string_view s, std::string_view prefix) noexcept;

std::uint64_t fnv1a64(std::string_view data) noexcept;
std::string hex64(std::uint64_t value);
std::string sha256_hex(std::string_view data);

bool is_hex40(std::string_view s) noexcept;

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for single-writer use: temp file then rename.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace kdrift

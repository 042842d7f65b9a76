#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kdrift::udiff {

enum class LineTag { context, add, del };

struct HunkLine {
  LineTag tag = LineTag::context;
  std::string text;
  /// Followed by "\ No newline at end of file" in the source diff.
  bool no_newline = false;

  friend bool operator==(const HunkLine&, const HunkLine&) = default;
};

struct Hunk {
  std::size_t old_start = 0;  // 1-based; for an empty old side, the line before the insertion point
  std::size_t old_len = 0;
  std::size_t new_start = 0;
  std::size_t new_len = 0;
  std::string section;  // text after the closing "@@", kept verbatim
  std::vector<HunkLine> lines;

  std::size_t old_side_count() const noexcept;
  std::size_t new_side_count() const noexcept;
  std::vector<std::string> old_side() const;
  std::vector<std::string> new_side() const;

  friend bool operator==(const Hunk&, const Hunk&) = default;
};

inline constexpr std::string_view kDevNull = "/dev/null";

struct FileDiff {
  std::vector<std::string> header_lines;  // "diff --git", "index ...", mode lines, preamble
  std::string old_path;                    // as written after "--- ", e.g. "a/drivers/x.c"
  std::string old_suffix;                  // tab-separated timestamp, if any
  std::string new_path;
  std::string new_suffix;
  std::vector<Hunk> hunks;

  bool is_creation() const noexcept { return old_path == kDevNull; }
  bool is_deletion() const noexcept { return new_path == kDevNull; }
  /// Repo-relative path with the a/ or b/ prefix removed; the live side for
  /// creations and deletions.
  std::string target_path() const;
  std::string source_path() const;

  friend bool operator==(const FileDiff&, const FileDiff&) = default;
};

struct UnifiedDiff {
  std::vector<FileDiff> file_diffs;
  std::vector<std::string> trailer_lines;

  /// Repo-relative paths touched, in diff order, without duplicates.
  std::vector<std::string> touched_paths() const;

  friend bool operator==(const UnifiedDiff&, const UnifiedDiff&) = default;
};

/// Strips a leading "a/" or "b/" component.
std::string strip_prefix(std::string_view path);

/// Throws Error(empty_input | malformed_header | truncated_hunk); the error
/// subject is the 1-based line number.
UnifiedDiff parse_diff(std::string_view text);

std::string render_diff(const UnifiedDiff& diff);
std::string render_hunk_header(const Hunk& hunk);

struct Violation {
  std::size_t file_index = 0;
  std::size_t hunk_index = 0;
  std::string kind;  // "hunk length mismatch", "path inconsistency", "overlapping hunks", ...
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationVerdict {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationVerdict validate_diff_syntax(const UnifiedDiff& diff);

using SourceMap = std::map<std::string, std::string>;

inline constexpr std::size_t kDefaultFuzz = 20;

/// Applies every file diff in order. Keys of `baseline` are repo-relative
/// paths. Throws Error(patch_apply_failure) naming the hunk index, or
/// Error(missing_baseline_file).
SourceMap apply_diff(const SourceMap& baseline, const UnifiedDiff& diff, std::size_t fuzz = kDefaultFuzz);

struct HunkFailure {
  std::size_t file_index = 0;
  std::size_t hunk_index = 0;
  std::string reason;  // "ambiguous anchor" or "no context anchor"
};

/// Relocates hunks whose old side does not match at the declared position by
/// finding the unique occurrence of their old-side block in the baseline, and
/// rewrites the headers. Returns `diff` unchanged when every hunk already
/// matches. Throws Error(reconstruction_failure) listing every unresolved hunk.
UnifiedDiff reconstruct_hunks(const SourceMap& baseline, const UnifiedDiff& diff);

/// Applies with fuzz, falling back to reconstruction once.
SourceMap apply_with_fallback(const SourceMap& baseline, const UnifiedDiff& diff, std::size_t fuzz = kDefaultFuzz);

}  // namespace kdrift::udiff

#include "kdrift/udiff.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <utility>

#include "kdrift/error.hpp"
#include "kdrift/text.hpp"

namespace kdrift::udiff {

namespace {

constexpr std::string_view kNoNewlineMarker = "\\ No newline at end of file";

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw Error(Errc::malformed_header, std::to_string(line_no), what);
}

std::optional<std::size_t> parse_number(std::string_view& s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

// "-12,3" or "-12"; `sign` is '-' or '+'.
bool parse_range(std::string_view& s, char sign, std::size_t& start, std::size_t& len) {
  if (s.empty() || s.front() != sign) return false;
  s.remove_prefix(1);
  auto a = parse_number(s);
  if (!a) return false;
  start = *a;
  len = 1;
  if (!s.empty() && s.front() == ',') {
    s.remove_prefix(1);
    auto b = parse_number(s);
    if (!b) return false;
    len = *b;
  }
  return true;
}

std::optional<Hunk> parse_hunk_header(std::string_view line) {
  if (!line.starts_with("@@ ")) return std::nullopt;
  std::string_view s = line.substr(3);
  Hunk h;
  if (!parse_range(s, '-', h.old_start, h.old_len)) return std::nullopt;
  if (!s.starts_with(" ")) return std::nullopt;
  s.remove_prefix(1);
  if (!parse_range(s, '+', h.new_start, h.new_len)) return std::nullopt;
  if (!s.starts_with(" @@")) return std::nullopt;
  s.remove_prefix(3);
  h.section = std::string(s);
  return h;
}

void split_path(std::string_view raw, std::string& path, std::string& suffix) {
  auto tab = raw.find('\t');
  path = std::string(raw.substr(0, tab));
  suffix = tab == std::string_view::npos ? std::string{} : std::string(raw.substr(tab));
}

bool is_file_header(const std::vector<std::string_view>& lines, std::size_t i) {
  return lines[i].starts_with("--- ") && i + 1 < lines.size() && lines[i + 1].starts_with("+++ ");
}

void append_range(std::string& out, char sign, std::size_t start, std::size_t len) {
  out += sign;
  out += std::to_string(start);
  if (len != 1) {
    out += ',';
    out += std::to_string(len);
  }
}

// 0-based index of the first old-side line, or the insertion index when the
// old side is empty.
std::size_t declared_position(const Hunk& h, std::size_t old_count) {
  if (old_count == 0) return h.old_start;
  return h.old_start == 0 ? 0 : h.old_start - 1;
}

bool block_matches(const LineBuffer& buf, std::size_t pos, const std::vector<std::string>& block) {
  if (pos + block.size() > buf.lines.size()) return false;
  return std::equal(block.begin(), block.end(), buf.lines.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool has_marker(const Hunk& h, bool old_side) {
  for (const auto& l : h.lines) {
    bool on_side = old_side ? l.tag != LineTag::add : l.tag != LineTag::del;
    if (on_side && l.no_newline) return true;
  }
  return false;
}

}  // namespace

std::size_t Hunk::old_side_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const HunkLine& l) { return l.tag != LineTag::add; }));
}

std::size_t Hunk::new_side_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const HunkLine& l) { return l.tag != LineTag::del; }));
}

std::vector<std::string> Hunk::old_side() const {
  std::vector<std::string> out;
  for (const auto& l : lines)
    if (l.tag != LineTag::add) out.push_back(l.text);
  return out;
}

std::vector<std::string> Hunk::new_side() const {
  std::vector<std::string> out;
  for (const auto& l : lines)
    if (l.tag != LineTag::del) out.push_back(l.text);
  return out;
}

std::string strip_prefix(std::string_view path) {
  if (path.starts_with("a/") || path.starts_with("b/")) path.remove_prefix(2);
  return std::string(path);
}

std::string FileDiff::target_path() const { return strip_prefix(is_deletion() ? old_path : new_path); }
std::string FileDiff::source_path() const { return strip_prefix(is_creation() ? new_path : old_path); }

std::vector<std::string> UnifiedDiff::touched_paths() const {
  std::vector<std::string> out;
  for (const auto& fd : file_diffs) {
    for (const auto& p : {fd.source_path(), fd.target_path()}) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  return out;
}

UnifiedDiff parse_diff(std::string_view text) {
  if (text.empty()) throw Error(Errc::empty_input, {}, "diff text is empty");
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].ends_with('\r')) malformed(i + 1, "CRLF line ending");
  }

  UnifiedDiff diff;
  std::vector<std::string> pending;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (!is_file_header(lines, i)) {
      pending.emplace_back(lines[i]);
      ++i;
      continue;
    }
    FileDiff fd;
    fd.header_lines = std::exchange(pending, {});
    split_path(lines[i].substr(4), fd.old_path, fd.old_suffix);
    split_path(lines[i + 1].substr(4), fd.new_path, fd.new_suffix);
    i += 2;
    if (i >= lines.size() || !lines[i].starts_with("@@")) malformed(i + 1, "expected hunk header");

    while (i < lines.size() && lines[i].starts_with("@@")) {
      auto parsed = parse_hunk_header(lines[i]);
      if (!parsed) malformed(i + 1, "bad hunk header");
      Hunk h = std::move(*parsed);
      ++i;
      std::size_t old_seen = 0, new_seen = 0;
      while (i < lines.size()) {
        std::string_view l = lines[i];
        bool complete = old_seen >= h.old_len && new_seen >= h.new_len;
        if (l.starts_with("@@") || l.starts_with("diff ")) break;
        if (l == kNoNewlineMarker || (l.starts_with("\\ ") && !h.lines.empty())) {
          if (h.lines.empty()) malformed(i + 1, "no-newline marker without a preceding line");
          h.lines.back().no_newline = true;
          ++i;
          continue;
        }
        if (complete && (is_file_header(lines, i) || l == "-- ")) break;
        char c = l.empty() ? '\0' : l.front();
        if (c != ' ' && c != '+' && c != '-') {
          if (complete) break;
          malformed(i + 1, "hunk line lacks ' ', '+' or '-' prefix");
        }
        HunkLine hl;
        hl.tag = c == ' ' ? LineTag::context : (c == '+' ? LineTag::add : LineTag::del);
        hl.text = std::string(l.substr(1));
        if (hl.tag != LineTag::add) ++old_seen;
        if (hl.tag != LineTag::del) ++new_seen;
        h.lines.push_back(std::move(hl));
        ++i;
      }
      if (i >= lines.size() && (old_seen < h.old_len || new_seen < h.new_len)) {
        throw Error(Errc::truncated_hunk, std::to_string(lines.size()), "diff ends inside a hunk");
      }
      fd.hunks.push_back(std::move(h));
    }
    diff.file_diffs.push_back(std::move(fd));
  }
  if (diff.file_diffs.empty()) malformed(1, "no file header found");
  diff.trailer_lines = std::move(pending);
  return diff;
}

std::string render_hunk_header(const Hunk& hunk) {
  std::string out = "@@ ";
  append_range(out, '-', hunk.old_start, hunk.old_len);
  out += ' ';
  append_range(out, '+', hunk.new_start, hunk.new_len);
  out += " @@";
  out += hunk.section;
  return out;
}

std::string render_diff(const UnifiedDiff& diff) {
  std::string out;
  for (const auto& fd : diff.file_diffs) {
    for (const auto& h : fd.header_lines) out += h + '\n';
    out += "--- " + fd.old_path + fd.old_suffix + '\n';
    out += "+++ " + fd.new_path + fd.new_suffix + '\n';
    for (const auto& h : fd.hunks) {
      out += render_hunk_header(h);
      out += '\n';
      for (const auto& l : h.lines) {
        out += l.tag == LineTag::context ? ' ' : (l.tag == LineTag::add ? '+' : '-');
        out += l.text;
        out += '\n';
        if (l.no_newline) {
          out += kNoNewlineMarker;
          out += '\n';
        }
      }
    }
  }
  for (const auto& t : diff.trailer_lines) out += t + '\n';
  return out;
}

ValidationVerdict validate_diff_syntax(const UnifiedDiff& diff) {
  ValidationVerdict v;
  auto add = [&](std::size_t f, std::size_t h, std::string kind, std::string detail) {
    v.violations.push_back(Violation{f, h, std::move(kind), std::move(detail)});
  };
  if (diff.file_diffs.empty()) add(0, 0, "empty diff", "no file diffs");

  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t f = 0; f < diff.file_diffs.size(); ++f) {
    const auto& fd = diff.file_diffs[f];
    if (!seen.emplace(fd.old_path, fd.new_path).second) add(f, 0, "duplicate file", fd.old_path + " -> " + fd.new_path);

    if (fd.is_creation() && fd.is_deletion()) {
      add(f, 0, "path inconsistency", "both sides are /dev/null");
    } else if (!fd.is_creation() && !fd.is_deletion() && strip_prefix(fd.old_path) != strip_prefix(fd.new_path)) {
      add(f, 0, "path inconsistency", fd.old_path + " vs " + fd.new_path);
    }
    if (fd.hunks.empty()) add(f, 0, "missing hunks", fd.old_path);

    for (std::size_t k = 0; k < fd.hunks.size(); ++k) {
      const auto& h = fd.hunks[k];
      if (h.lines.empty()) {
        add(f, k, "empty hunk", render_hunk_header(h));
        continue;
      }
      auto old_count = h.old_side_count();
      auto new_count = h.new_side_count();
      if (old_count != h.old_len || new_count != h.new_len) {
        add(f, k, "hunk length mismatch",
            "header -" + std::to_string(h.old_len) + " +" + std::to_string(h.new_len) + ", body -" +
                std::to_string(old_count) + " +" + std::to_string(new_count));
      }
      if (h.old_len > 0 && h.old_start == 0) add(f, k, "bad line number", "old_start 0 with old lines");
      if (h.new_len > 0 && h.new_start == 0) add(f, k, "bad line number", "new_start 0 with new lines");
      if (fd.is_creation() && h.old_len != 0) add(f, k, "sentinel mismatch", "creation hunk has old lines");
      if (fd.is_deletion() && h.new_len != 0) add(f, k, "sentinel mismatch", "deletion hunk has new lines");
      if (k > 0) {
        const auto& prev = fd.hunks[k - 1];
        if (h.old_start < prev.old_start) {
          add(f, k, "unordered hunks", "old_start decreases");
        } else if (prev.old_len > 0 && prev.old_start + prev.old_len > h.old_start + (h.old_len == 0 ? 1 : 0)) {
          add(f, k, "overlapping hunks",
              "hunk " + std::to_string(k - 1) + " ends at line " + std::to_string(prev.old_start + prev.old_len - 1));
        }
      }
    }
  }
  return v;
}

SourceMap apply_diff(const SourceMap& baseline, const UnifiedDiff& diff, std::size_t fuzz) {
  SourceMap result = baseline;
  for (const auto& fd : diff.file_diffs) {
    const std::string src = fd.source_path();
    LineBuffer buf;
    if (!fd.is_creation()) {
      auto it = result.find(src);
      if (it == result.end()) throw Error(Errc::missing_baseline_file, src, "not present in baseline");
      buf = LineBuffer::from_text(it->second);
    }

    std::ptrdiff_t delta = 0;
    std::size_t min_pos = 0;
    for (std::size_t k = 0; k < fd.hunks.size(); ++k) {
      const auto& h = fd.hunks[k];
      const auto old_block = h.old_side();
      const auto new_block = h.new_side();
      auto declared = static_cast<std::ptrdiff_t>(declared_position(h, old_block.size())) + delta;

      auto fits = [&](std::ptrdiff_t pos) {
        if (pos < static_cast<std::ptrdiff_t>(min_pos)) return false;
        if (old_block.empty()) return pos <= static_cast<std::ptrdiff_t>(buf.lines.size());
        return block_matches(buf, static_cast<std::size_t>(pos), old_block);
      };

      std::optional<std::ptrdiff_t> found;
      std::size_t span = old_block.empty() ? 0 : fuzz;
      for (std::size_t off = 0; off <= span && !found; ++off) {
        auto o = static_cast<std::ptrdiff_t>(off);
        if (fits(declared + o))
          found = declared + o;
        else if (off > 0 && fits(declared - o))
          found = declared - o;
      }
      if (!found) {
        auto lo = std::max<std::ptrdiff_t>(0, declared - static_cast<std::ptrdiff_t>(span)) + 1;
        auto hi = declared + static_cast<std::ptrdiff_t>(span) + 1;
        throw Error(Errc::patch_apply_failure, std::to_string(k),
                    src + ": context not found in lines " + std::to_string(lo) + ".." + std::to_string(hi));
      }

      auto pos = static_cast<std::size_t>(*found);
      bool reaches_eof = pos + old_block.size() == buf.lines.size();
      auto first = buf.lines.begin() + static_cast<std::ptrdiff_t>(pos);
      buf.lines.erase(first, first + static_cast<std::ptrdiff_t>(old_block.size()));
      buf.lines.insert(buf.lines.begin() + static_cast<std::ptrdiff_t>(pos), new_block.begin(), new_block.end());
      if (reaches_eof) {
        bool old_marker = has_marker(h, true);
        bool new_marker = has_marker(h, false);
        if (old_marker || new_marker) buf.final_newline = !new_marker;
      }
      delta += static_cast<std::ptrdiff_t>(new_block.size()) - static_cast<std::ptrdiff_t>(old_block.size());
      min_pos = pos + new_block.size();
    }

    if (fd.is_deletion()) {
      result.erase(src);
    } else {
      if (buf.lines.empty()) buf.final_newline = true;
      result[fd.target_path()] = buf.to_text();
    }
  }
  return result;
}

UnifiedDiff reconstruct_hunks(const SourceMap& baseline, const UnifiedDiff& diff) {
  UnifiedDiff out = diff;
  std::vector<HunkFailure> failures;
  bool changed = false;

  for (std::size_t f = 0; f < out.file_diffs.size(); ++f) {
    auto& fd = out.file_diffs[f];
    if (fd.is_creation()) continue;
    auto it = baseline.find(fd.source_path());
    if (it == baseline.end()) throw Error(Errc::missing_baseline_file, fd.source_path(), "not present in baseline");
    const LineBuffer buf = LineBuffer::from_text(it->second);

    std::vector<std::pair<std::size_t, std::size_t>> placed;  // (position, hunk index)
    bool file_changed = false;
    for (std::size_t k = 0; k < fd.hunks.size(); ++k) {
      const auto& h = fd.hunks[k];
      const auto block = h.old_side();
      auto declared = declared_position(h, block.size());
      if (block.empty()) {
        if (declared <= buf.lines.size())
          placed.emplace_back(declared, k);
        else
          failures.push_back({f, k, "no context anchor"});
        continue;
      }
      if (block_matches(buf, declared, block)) {
        placed.emplace_back(declared, k);
        continue;
      }
      std::vector<std::size_t> hits;
      for (std::size_t p = 0; p + block.size() <= buf.lines.size(); ++p) {
        if (block_matches(buf, p, block)) hits.push_back(p);
      }
      if (hits.size() == 1) {
        placed.emplace_back(hits.front(), k);
        file_changed = true;
      } else {
        failures.push_back({f, k, hits.empty() ? "no context anchor" : "ambiguous anchor"});
      }
    }
    if (!file_changed) continue;

    std::stable_sort(placed.begin(), placed.end());
    std::vector<Hunk> rebuilt;
    std::ptrdiff_t delta = 0;
    std::size_t prev_end = 0;
    for (auto [pos, k] : placed) {
      Hunk h = fd.hunks[k];
      auto old_count = h.old_side_count();
      auto new_count = h.new_side_count();
      if (pos < prev_end) {
        failures.push_back({f, k, "overlapping after relocation"});
        continue;
      }
      h.old_len = old_count;
      h.new_len = new_count;
      h.old_start = old_count == 0 ? pos : pos + 1;
      auto new_pos = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(pos) + delta);
      h.new_start = new_count == 0 ? new_pos : new_pos + 1;
      delta += static_cast<std::ptrdiff_t>(new_count) - static_cast<std::ptrdiff_t>(old_count);
      prev_end = pos + old_count;
      rebuilt.push_back(std::move(h));
    }
    fd.hunks = std::move(rebuilt);
    changed = true;
  }

  if (!failures.empty()) {
    std::string detail;
    for (const auto& fl : failures) {
      if (!detail.empty()) detail += "; ";
      detail += out.file_diffs[fl.file_index].source_path() + " hunk " + std::to_string(fl.hunk_index) + ": " +
                fl.reason;
    }
    throw Error(Errc::reconstruction_failure, failures.front().reason, detail);
  }
  return changed ? out : diff;
}

SourceMap apply_with_fallback(const SourceMap& baseline, const UnifiedDiff& diff, std::size_t fuzz) {
  try {
    return apply_diff(baseline, diff, fuzz);
  } catch (const Error& e) {
    if (e.code() != Errc::patch_apply_failure) throw;
  }
  return apply_diff(baseline, reconstruct_hunks(baseline, diff), fuzz);
}

}  // namespace kdrift::udiff

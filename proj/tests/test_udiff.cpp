#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "fixtures.hpp"
#include "kdrift/error.hpp"
#include "kdrift/udiff.hpp"

using namespace kdrift;
using namespace kdrift::udiff;
namespace fs = std::filesystem;

namespace {

const char* kSimple =
    "--- a/drivers/x.c\n"
    "+++ b/drivers/x.c\n"
    "@@ -2,3 +2,3 @@ int probe(void)\n"
    " one\n"
    "-two\n"
    "+TWO\n"
    " three\n";

SourceMap simple_baseline() { return {{"drivers/x.c", "zero\none\ntwo\nthree\nfour\n"}}; }

template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected kdrift::Error");
  return Errc::empty_input;
}

template <typename F>
Error caught(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected kdrift::Error");
  return Error(Errc::empty_input, {});
}

std::vector<fs::path> fixture_cases() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(testing::fixture_dir() / "diffs" / "cases")) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parse_diff rejects empty input") {
  CHECK(error_code([] { parse_diff(""); }) == Errc::empty_input);
}

TEST_CASE("parse_diff reads a single-file single-hunk diff") {
  auto d = parse_diff(kSimple);
  REQUIRE(d.file_diffs.size() == 1);
  REQUIRE(d.file_diffs[0].hunks.size() == 1);
  const auto& h = d.file_diffs[0].hunks[0];
  CHECK(h.old_start == 2);
  CHECK(h.old_len == 3);
  CHECK(h.new_start == 2);
  CHECK(h.new_len == 3);
  CHECK(h.section == " int probe(void)");
  CHECK(h.lines.size() == 4);
  CHECK(d.file_diffs[0].target_path() == "drivers/x.c");
  CHECK(render_diff(d) == kSimple);
}

TEST_CASE("parse_diff reports the line lacking a prefix") {
  std::string bad =
      "--- a/x.c\n"
      "+++ b/x.c\n"
      "@@ -1,3 +1,3 @@\n"
      " a\n"
      "garbage\n"
      " c\n";
  auto e = caught([&] { parse_diff(bad); });
  CHECK(e.code() == Errc::malformed_header);
  CHECK(e.subject() == "5");
}

TEST_CASE("parse_diff rejects malformed hunk headers and CRLF") {
  CHECK(error_code([] { parse_diff("--- a/x\n+++ b/x\n@@ -1,x +1 @@\n a\n"); }) == Errc::malformed_header);
  CHECK(error_code([] { parse_diff("--- a/x\n+++ b/x\n a\n"); }) == Errc::malformed_header);
  CHECK(error_code([] { parse_diff("just some text\n"); }) == Errc::malformed_header);
  auto e = caught([] { parse_diff("--- a/x\r\n+++ b/x\n@@ -1 +1 @@\n-a\n+b\n"); });
  CHECK(e.code() == Errc::malformed_header);
  CHECK(e.subject() == "1");
}

TEST_CASE("parse_diff detects a hunk truncated at end of input") {
  CHECK(error_code([] { parse_diff("--- a/x\n+++ b/x\n@@ -1,3 +1,3 @@\n a\n-b\n"); }) == Errc::truncated_hunk);
}

TEST_CASE("no-newline marker survives the round trip") {
  std::string text =
      "--- a/x\n+++ b/x\n@@ -1,2 +1,2 @@\n a\n-b\n\\ No newline at end of file\n+c\n\\ No newline at end of file\n";
  auto d = parse_diff(text);
  CHECK(d.file_diffs[0].hunks[0].lines[1].no_newline);
  CHECK(d.file_diffs[0].hunks[0].lines[2].no_newline);
  CHECK(render_diff(d) == text);
  auto out = apply_diff({{"x", "a\nb"}}, d, 0);
  CHECK(out.at("x") == "a\nc");
}

TEST_CASE("validate_diff_syntax") {
  SUBCASE("header count larger than body") {
    std::string text =
        "--- a/x.c\n+++ b/x.c\n"
        "@@ -1,3 +1,3 @@\n a\n-b\n+B\n"
        "@@ -10,1 +10,1 @@\n-z\n+Z\n";
    auto v = validate_diff_syntax(parse_diff(text));
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].kind == "hunk length mismatch");
    CHECK(v.violations[0].hunk_index == 0);
  }
  SUBCASE("path stems differ") {
    auto v = validate_diff_syntax(parse_diff("--- a/drivers/x.c\n+++ b/drivers/y.c\n@@ -1 +1 @@\n-a\n+b\n"));
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].kind == "path inconsistency");
  }
  SUBCASE("creation and deletion sentinels are consistent") {
    CHECK(validate_diff_syntax(parse_diff("--- /dev/null\n+++ b/n.c\n@@ -0,0 +1 @@\n+x\n")).ok());
    CHECK(validate_diff_syntax(parse_diff("--- a/n.c\n+++ /dev/null\n@@ -1 +0,0 @@\n-x\n")).ok());
  }
  SUBCASE("overlapping hunks") {
    std::string text =
        "--- a/x\n+++ b/x\n"
        "@@ -1,3 +1,3 @@\n a\n-b\n+B\n c\n"
        "@@ -3,2 +3,2 @@\n c\n-d\n+D\n";
    auto v = validate_diff_syntax(parse_diff(text));
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].kind == "overlapping hunks");
  }
  SUBCASE("duplicate file pair") {
    std::string one = "--- a/x\n+++ b/x\n@@ -1 +1 @@\n-a\n+b\n";
    auto v = validate_diff_syntax(parse_diff(one + one));
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].kind == "duplicate file");
  }
  SUBCASE("every fixture diff is clean") {
    for (const auto& c : fixture_cases()) {
      auto v = validate_diff_syntax(parse_diff(read_file(c / "patch.diff")));
      CHECK_MESSAGE(v.ok(), c.string());
    }
  }
}

TEST_CASE("apply_diff") {
  SUBCASE("exact offset") {
    auto out = apply_diff(simple_baseline(), parse_diff(kSimple), 0);
    CHECK(out.at("drivers/x.c") == "zero\none\nTWO\nthree\nfour\n");
  }
  SUBCASE("baseline shifted by two lines") {
    SourceMap shifted = {{"drivers/x.c", "p\nq\nzero\none\ntwo\nthree\nfour\n"}};
    CHECK(error_code([&] { apply_diff(shifted, parse_diff(kSimple), 0); }) == Errc::patch_apply_failure);
    auto out = apply_diff(shifted, parse_diff(kSimple), 5);
    CHECK(out.at("drivers/x.c") == "p\nq\nzero\none\nTWO\nthree\nfour\n");
  }
  SUBCASE("context absent everywhere") {
    SourceMap other = {{"drivers/x.c", "alpha\nbeta\n"}};
    auto e = caught([&] { apply_diff(other, parse_diff(kSimple), 20); });
    CHECK(e.code() == Errc::patch_apply_failure);
    CHECK(e.subject() == "0");
  }
  SUBCASE("missing baseline file") {
    CHECK(error_code([] { apply_diff({}, parse_diff(kSimple)); }) == Errc::missing_baseline_file);
  }
  SUBCASE("creation and deletion") {
    auto out = apply_diff({{"old.c", "x\n"}},
                          parse_diff("--- /dev/null\n+++ b/new.c\n@@ -0,0 +1,2 @@\n+a\n+b\n"
                                     "--- a/old.c\n+++ /dev/null\n@@ -1 +0,0 @@\n-x\n"),
                          0);
    CHECK(out.size() == 1);
    CHECK(out.at("new.c") == "a\nb\n");
  }
}

TEST_CASE("apply_diff matches GNU patch on every fixture") {
  for (const auto& c : fixture_cases()) {
    auto before = testing::read_tree(c / "before");
    auto after = testing::read_tree(c / "after");
    auto out = apply_diff(before, parse_diff(read_file(c / "patch.diff")), 0);
    CHECK_MESSAGE(out == after, c.string());
  }
}

TEST_CASE("render_diff is the inverse of parse_diff on fixtures") {
  for (const auto& c : fixture_cases()) {
    auto text = read_file(c / "patch.diff");
    CHECK_MESSAGE(render_diff(parse_diff(text)) == text, c.string());
  }
}

TEST_CASE("render_diff keeps file order and recomputes headers") {
  std::string text = "--- a/z\n+++ b/z\n@@ -1 +1 @@\n-a\n+b\n--- a/a\n+++ b/a\n@@ -1 +1 @@\n-c\n+d\n";
  auto d = parse_diff(text);
  auto rendered = render_diff(d);
  CHECK(rendered.find("a/z") < rendered.find("a/a"));
  d.file_diffs[0].hunks[0].lines.push_back({LineTag::add, "extra", false});
  d.file_diffs[0].hunks[0].new_len = 2;
  CHECK(render_diff(d).find("@@ -1 +1,2 @@") != std::string::npos);
}

TEST_CASE("reconstruct_hunks") {
  SUBCASE("stale header with unique context") {
    std::string stale =
        "--- a/drivers/x.c\n+++ b/drivers/x.c\n"
        "@@ -40,3 +40,3 @@\n one\n-two\n+TWO\n three\n";
    auto fixed = reconstruct_hunks(simple_baseline(), parse_diff(stale));
    CHECK(fixed.file_diffs[0].hunks[0].old_start == 2);
    CHECK(fixed.file_diffs[0].hunks[0].new_start == 2);
    CHECK(apply_diff(simple_baseline(), fixed, 0) == apply_diff(simple_baseline(), parse_diff(kSimple), 0));
  }
  SUBCASE("ambiguous anchor") {
    SourceMap twice = {{"drivers/x.c", "one\ntwo\nthree\nmid\none\ntwo\nthree\n"}};
    std::string stale = "--- a/drivers/x.c\n+++ b/drivers/x.c\n@@ -30,3 +30,3 @@\n one\n-two\n+TWO\n three\n";
    auto e = caught([&] { reconstruct_hunks(twice, parse_diff(stale)); });
    CHECK(e.code() == Errc::reconstruction_failure);
    CHECK(e.subject() == "ambiguous anchor");
  }
  SUBCASE("clean diff is returned unchanged") {
    auto d = parse_diff(kSimple);
    CHECK(reconstruct_hunks(simple_baseline(), d) == d);
  }
  SUBCASE("later hunks get new_start recomputed") {
    SourceMap base = {{"f", "a\nb\nc\nd\ne\nf\ng\nh\ni\nj\n"}};
    std::string text =
        "--- a/f\n+++ b/f\n"
        "@@ -1,2 +1,3 @@\n a\n+a2\n b\n"
        "@@ -15,2 +16,1 @@\n h\n-i\n";
    auto fixed = reconstruct_hunks(base, parse_diff(text));
    const auto& h = fixed.file_diffs[0].hunks[1];
    CHECK(h.old_start == 8);
    CHECK(h.new_start == 9);
    CHECK(apply_diff(base, fixed, 0).at("f") == "a\na2\nb\nc\nd\ne\nf\ng\nh\nj\n");
  }
}

TEST_CASE("line-count invariant and fuzz monotonicity over fixtures") {
  for (const auto& c : fixture_cases()) {
    auto before = testing::read_tree(c / "before");
    auto d = parse_diff(read_file(c / "patch.diff"));
    auto exact = apply_diff(before, d, 0);
    for (std::size_t k : {1u, 5u, 20u}) CHECK(apply_diff(before, d, k) == exact);
    for (const auto& fd : d.file_diffs) {
      if (fd.is_creation() || fd.is_deletion()) continue;
      std::ptrdiff_t expected = static_cast<std::ptrdiff_t>(LineBuffer::from_text(before.at(fd.source_path())).lines.size());
      for (const auto& h : fd.hunks) expected += static_cast<std::ptrdiff_t>(h.new_len) - static_cast<std::ptrdiff_t>(h.old_len);
      CHECK(static_cast<std::ptrdiff_t>(LineBuffer::from_text(exact.at(fd.target_path())).lines.size()) == expected);
    }
  }
}

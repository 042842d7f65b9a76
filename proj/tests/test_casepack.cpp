#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "kdrift/casepack.hpp"
#include "kdrift/error.hpp"
#include "kdrift/udiff.hpp"

using namespace kdrift;
using nlohmann::json;

namespace {

CasePack ida_pack() {
  auto dir = testing::fixture_dir() / "ida";
  CasePack p;
  p.message = "misc: demo: convert to ida_alloc()/ida_free()\n\nkernel-hash: 1111111111111111111111111111111111111111\n";
  p.files = {"drivers/misc/demo_ida.c"};
  p.patch = read_file(dir / "ref.patch");
  p.hash = "2222222222222222222222222222222222222222";
  p.kernel_hash = "1111111111111111111111111111111111111111";
  p.type_label = TaxonomyLabel::human(FineLabel::deprecation);
  p.contents = testing::read_tree(dir / "baseline");
  return p;
}

Errc parse_error(const std::string& raw, std::string* subject = nullptr) {
  try {
    parse_case_pack(raw);
  } catch (const Error& e) {
    if (subject) *subject = e.subject();
    return e.code();
  }
  FAIL("expected an error");
  return Errc::empty_input;
}

}  // namespace

TEST_CASE("parse_case_pack round-trips serialize_case_pack") {
  auto pack = ida_pack();
  auto text = serialize_case_pack(pack);
  CHECK(parse_case_pack(text) == pack);

  pack.link = "https://lore.kernel.org/r/example";
  pack.description = "converted by hand";
  pack.type_label = TaxonomyLabel{CoarseLabel::api_migration, FineLabel::rename, 0.8, LabelOrigin::propagated};
  CHECK(parse_case_pack(serialize_case_pack(pack)) == pack);
}

TEST_CASE("serialize_case_pack is deterministic and uses the published key names") {
  auto a = ida_pack();
  auto b = ida_pack();
  CHECK(serialize_case_pack(a) == serialize_case_pack(b));
  auto doc = json::parse(serialize_case_pack(a));
  CHECK(doc.contains("kernel-hash"));
  CHECK_FALSE(doc.contains("kernel_hash"));
  CHECK_FALSE(doc.contains("link"));
  CHECK_FALSE(doc.contains("description"));
  std::set<std::string> keys;
  for (const auto& [k, _] : doc.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"contents", "files", "hash", "kernel-hash", "message", "patch", "type"});
}

TEST_CASE("parse_case_pack errors") {
  auto doc = json::parse(serialize_case_pack(ida_pack()));
  std::string subject;

  CHECK(parse_error("{not json") == Errc::malformed_document);
  CHECK(parse_error("[1,2]") == Errc::malformed_document);

  auto missing = doc;
  missing.erase("kernel-hash");
  CHECK(parse_error(missing.dump(), &subject) == Errc::schema_violation);
  CHECK(subject == "kernel-hash");

  auto unknown = doc;
  unknown["extra"] = 1;
  CHECK(parse_error(unknown.dump(), &subject) == Errc::schema_violation);
  CHECK(subject == "extra");

  auto wrong_type = doc;
  wrong_type["files"] = "drivers/misc/demo_ida.c";
  CHECK(parse_error(wrong_type.dump(), &subject) == Errc::schema_violation);
  CHECK(subject == "files");

  auto bad_label = doc;
  bad_label["type"] = "cleanup";
  CHECK(parse_error(bad_label.dump(), &subject) == Errc::schema_violation);
  CHECK(subject == "type");

  auto untracked = doc;
  untracked["files"] = json::array({"drivers/other.c"});
  untracked["contents"] = json{{"drivers/other.c", ""}};
  CHECK(parse_error(untracked.dump(), &subject) == Errc::invariant_violation);
  CHECK(subject == "files");

  auto no_content = doc;
  no_content["contents"] = json::object();
  CHECK(parse_error(no_content.dump(), &subject) == Errc::invariant_violation);
  CHECK(subject == "contents");

  auto upper = doc;
  upper["hash"] = "ABCDEF1111111111111111111111111111111111";
  CHECK(parse_error(upper.dump(), &subject) == Errc::invariant_violation);
  CHECK(subject == "hash");

  auto same = doc;
  same["hash"] = same["kernel-hash"];
  CHECK(parse_error(same.dump()) == Errc::invariant_violation);

  auto bad_patch = doc;
  bad_patch["patch"] = "--- a/drivers/misc/demo_ida.c\n+++ b/drivers/misc/demo_ida.c\n@@ -1,2 +1,2 @@\n-x\n+y\n";
  CHECK(parse_error(bad_patch.dump(), &subject) == Errc::invariant_violation);
  CHECK(subject == "patch");

  auto human_low = doc;
  human_low["type"]["confidence"] = 0.5;
  CHECK(parse_error(human_low.dump(), &subject) == Errc::invariant_violation);
  CHECK(subject == "type");

  auto wrong_coarse = doc;
  wrong_coarse["type"] = json{{"coarse", "regression"}, {"fine", "rename"}, {"confidence", 1.0}, {"origin", "human"}};
  CHECK(parse_error(wrong_coarse.dump()) == Errc::invariant_violation);
}

TEST_CASE("label given as a bare name") {
  auto doc = json::parse(serialize_case_pack(ida_pack()));
  doc["type"] = "regression";
  auto pack = parse_case_pack(doc.dump());
  CHECK(pack.type_label.coarse == CoarseLabel::regression);
  CHECK(pack.type_label.fine == FineLabel::regression);
  doc["type"] = "api_migration";
  pack = parse_case_pack(doc.dump());
  CHECK(pack.type_label.coarse == CoarseLabel::api_migration);
  CHECK_FALSE(pack.type_label.fine.has_value());
}

TEST_CASE("consolidate_label") {
  CHECK(consolidate_label("rename") == CoarseLabel::api_migration);
  CHECK(consolidate_label("regression") == CoarseLabel::regression);
  CHECK(consolidate_label("hygiene") == CoarseLabel::api_migration);
  CHECK_THROWS_AS(consolidate_label("cleanup"), Error);
  for (auto f : kAllFineLabels) {
    auto c = consolidate_label(f);
    CHECK((c == CoarseLabel::api_migration || c == CoarseLabel::regression));
    CHECK_FALSE(check_label(TaxonomyLabel::human(f)).has_value());
  }
}

TEST_CASE("validation plan ids are unique") {
  CHECK_NOTHROW(check_plan(ValidationPlan{{"probe", "unload"}, {"kasan"}}));
  CHECK_THROWS_AS(check_plan(ValidationPlan{{"probe"}, {"probe"}}), Error);
}

TEST_CASE("round trip over generated packs") {
  std::mt19937 rng(11);
  auto base = ida_pack();
  auto random_text = [&](std::size_t n) {
    std::string s;
    static const char* pieces[] = {" ", "\n", "\t", "\"", "\\", "a", "b", "X", "{", "}", "\xc3\xa9", "\xe2\x86\x92"};
    for (std::size_t i = 0; i < n; ++i) s += pieces[rng() % std::size(pieces)];
    return s;
  };
  for (int i = 0; i < 100; ++i) {
    auto p = base;
    p.message = random_text(rng() % 80);
    if (rng() % 2) p.link = random_text(10);
    if (rng() % 2) p.description = random_text(30);
    p.contents["drivers/misc/extra.h"] = random_text(rng() % 200);
    p.files.push_back("drivers/misc/extra.h");
    auto f = kAllFineLabels[rng() % 9];
    p.type_label = {consolidate_label(f), f, (rng() % 1000) / 999.0, LabelOrigin::propagated};
    auto parsed = parse_case_pack(serialize_case_pack(p));
    CHECK(parsed == p);
    CHECK(udiff::validate_diff_syntax(udiff::parse_diff(parsed.patch)).ok());
  }
}

TEST_CASE("corpus index round trip") {
  std::vector<CorpusEntry> entries = {{"api_migration/aa.json", std::string(40, 'a'), CoarseLabel::api_migration},
                                      {"regression/bb.json", std::string(40, 'b'), CoarseLabel::regression}};
  CHECK(parse_index(serialize_index(entries)) == entries);
}

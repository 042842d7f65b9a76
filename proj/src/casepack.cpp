#include "kdrift/casepack.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "kdrift/error.hpp"
#include "kdrift/text.hpp"
#include "kdrift/udiff.hpp"

namespace kdrift {

using nlohmann::json;

std::string_view to_string(CoarseLabel label) noexcept {
  switch (label) {
    case CoarseLabel::api_migration: return "api_migration";
    case CoarseLabel::regression: return "regression";
    case CoarseLabel::optimisation_like: return "optimisation_like";
  }
  return "";
}

std::string_view to_string(FineLabel label) noexcept {
  switch (label) {
    case FineLabel::deprecation: return "deprecation";
    case FineLabel::transfer: return "transfer";
    case FineLabel::rename: return "rename";
    case FineLabel::removal: return "removal";
    case FineLabel::simplification: return "simplification";
    case FineLabel::optimisation: return "optimisation";
    case FineLabel::security: return "security";
    case FineLabel::regression: return "regression";
    case FineLabel::hygiene: return "hygiene";
  }
  return "";
}

std::string_view to_string(LabelOrigin origin) noexcept {
  return origin == LabelOrigin::human ? "human" : "propagated";
}

CoarseLabel coarse_from_string(std::string_view name) {
  for (auto c : {CoarseLabel::api_migration, CoarseLabel::regression, CoarseLabel::optimisation_like}) {
    if (to_string(c) == name) return c;
  }
  throw Error(Errc::unknown_label, std::string(name), "not a coarse label");
}

FineLabel fine_from_string(std::string_view name) {
  for (auto f : kAllFineLabels) {
    if (to_string(f) == name) return f;
  }
  throw Error(Errc::unknown_label, std::string(name), "not a fine label");
}

LabelOrigin origin_from_string(std::string_view name) {
  if (name == "human") return LabelOrigin::human;
  if (name == "propagated") return LabelOrigin::propagated;
  throw Error(Errc::unknown_label, std::string(name), "not a label origin");
}

CoarseLabel consolidate_label(FineLabel fine) noexcept {
  return fine == FineLabel::regression ? CoarseLabel::regression : CoarseLabel::api_migration;
}

CoarseLabel consolidate_label(std::string_view fine) { return consolidate_label(fine_from_string(fine)); }

TaxonomyLabel TaxonomyLabel::human(FineLabel fine) {
  return TaxonomyLabel{consolidate_label(fine), fine, 1.0, LabelOrigin::human};
}

std::optional<std::string> check_label(const TaxonomyLabel& label) {
  if (!std::isfinite(label.confidence) || label.confidence < 0.0 || label.confidence > 1.0)
    return "confidence outside [0,1]";
  if (label.origin == LabelOrigin::human && label.confidence != 1.0) return "human label with confidence != 1";
  if (label.fine) {
    switch (*label.fine) {
      case FineLabel::deprecation:
      case FineLabel::transfer:
      case FineLabel::rename:
      case FineLabel::removal:
        if (label.coarse != CoarseLabel::api_migration) return "api-migration fine label under another coarse label";
        break;
      case FineLabel::regression:
        if (label.coarse != CoarseLabel::regression) return "regression fine label under another coarse label";
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

void check_plan(const ValidationPlan& plan) {
  std::set<std::string> seen;
  for (const auto* list : {&plan.functional_checks, &plan.security_checks}) {
    for (const auto& id : *list) {
      if (!seen.insert(id).second) throw Error(Errc::invariant_violation, id, "duplicate check id in plan");
    }
  }
}

void check_invariants(const CasePack& pack) {
  if (!is_hex40(pack.hash)) throw Error(Errc::invariant_violation, "hash", "not a lowercase 40-hex commit id");
  if (!is_hex40(pack.kernel_hash))
    throw Error(Errc::invariant_violation, "kernel-hash", "not a lowercase 40-hex commit id");
  if (pack.hash == pack.kernel_hash) throw Error(Errc::invariant_violation, "kernel-hash", "equals hash");
  if (auto bad = check_label(pack.type_label)) throw Error(Errc::invariant_violation, "type", *bad);

  udiff::UnifiedDiff diff;
  try {
    diff = udiff::parse_diff(pack.patch);
  } catch (const Error& e) {
    throw Error(Errc::invariant_violation, "patch", e.what());
  }
  auto verdict = udiff::validate_diff_syntax(diff);
  if (!verdict.ok()) throw Error(Errc::invariant_violation, "patch", verdict.violations.front().kind);

  for (const auto& path : diff.touched_paths()) {
    if (std::find(pack.files.begin(), pack.files.end(), path) == pack.files.end())
      throw Error(Errc::invariant_violation, "files", "patch touches " + path + " which is not listed");
  }
  for (const auto& path : pack.files) {
    if (!pack.contents.contains(path))
      throw Error(Errc::invariant_violation, "contents", "no content for listed file " + path);
  }
}

namespace {

const std::set<std::string> kRequiredKeys = {"message", "files", "patch", "hash", "kernel-hash", "type", "contents"};
const std::set<std::string> kOptionalKeys = {"link", "description"};

[[noreturn]] void schema(const std::string& key, const std::string& what) {
  throw Error(Errc::schema_violation, key, what);
}

std::string expect_string(const json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_string()) schema(key, "expected a string");
  return v.get<std::string>();
}

TaxonomyLabel parse_label(const json& v) {
  try {
    if (v.is_string()) {
      auto name = v.get<std::string>();
      for (auto f : kAllFineLabels) {
        if (to_string(f) == name) return TaxonomyLabel::human(f);
      }
      return TaxonomyLabel{coarse_from_string(name), std::nullopt, 1.0, LabelOrigin::human};
    }
    if (!v.is_object()) schema("type", "expected an object or label name");
    static const std::set<std::string> allowed = {"coarse", "fine", "confidence", "origin"};
    for (const auto& [k, _] : v.items()) {
      if (!allowed.contains(k)) schema("type." + k, "unknown key");
    }
    TaxonomyLabel label;
    if (!v.contains("coarse") || !v["coarse"].is_string()) schema("type.coarse", "missing or not a string");
    label.coarse = coarse_from_string(v["coarse"].get<std::string>());
    if (v.contains("fine") && !v["fine"].is_null()) {
      if (!v["fine"].is_string()) schema("type.fine", "expected a string");
      label.fine = fine_from_string(v["fine"].get<std::string>());
    }
    if (v.contains("confidence")) {
      if (!v["confidence"].is_number()) schema("type.confidence", "expected a number");
      label.confidence = v["confidence"].get<double>();
    }
    if (v.contains("origin")) {
      if (!v["origin"].is_string()) schema("type.origin", "expected a string");
      label.origin = origin_from_string(v["origin"].get<std::string>());
    }
    return label;
  } catch (const Error& e) {
    if (e.code() == Errc::unknown_label) schema("type", e.what());
    throw;
  }
}

json label_to_json(const TaxonomyLabel& label) {
  json j = json::object();
  j["coarse"] = to_string(label.coarse);
  if (label.fine) j["fine"] = to_string(*label.fine);
  j["confidence"] = label.confidence;
  j["origin"] = to_string(label.origin);
  return j;
}

}  // namespace

CasePack parse_case_pack(std::string_view raw) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::malformed_document, {}, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::malformed_document, {}, "top-level value is not an object");

  for (const auto& [key, _] : doc.items()) {
    if (!kRequiredKeys.contains(key) && !kOptionalKeys.contains(key)) schema(key, "unknown key");
  }
  for (const auto& key : kRequiredKeys) {
    if (!doc.contains(key)) schema(key, "missing required key");
  }

  CasePack pack;
  pack.message = expect_string(doc, "message");
  pack.patch = expect_string(doc, "patch");
  pack.hash = expect_string(doc, "hash");
  pack.kernel_hash = expect_string(doc, "kernel-hash");

  const auto& files = doc["files"];
  if (!files.is_array()) schema("files", "expected an array");
  for (const auto& f : files) {
    if (!f.is_string()) schema("files", "expected an array of strings");
    pack.files.push_back(f.get<std::string>());
  }

  const auto& contents = doc["contents"];
  if (!contents.is_object()) schema("contents", "expected an object");
  for (const auto& [path, text] : contents.items()) {
    if (!text.is_string()) schema("contents", "value for " + path + " is not a string");
    pack.contents.emplace(path, text.get<std::string>());
  }

  pack.type_label = parse_label(doc["type"]);
  for (const auto* key : {"link", "description"}) {
    if (!doc.contains(key) || doc[key].is_null()) continue;
    if (!doc[key].is_string()) schema(key, "expected a string");
    (std::string_view(key) == "link" ? pack.link : pack.description) = doc[key].get<std::string>();
  }

  check_invariants(pack);
  return pack;
}

std::string serialize_case_pack(const CasePack& pack) {
  json doc = json::object();
  doc["message"] = pack.message;
  doc["files"] = pack.files;
  doc["patch"] = pack.patch;
  doc["hash"] = pack.hash;
  doc["kernel-hash"] = pack.kernel_hash;
  doc["type"] = label_to_json(pack.type_label);
  doc["contents"] = json(pack.contents);
  if (pack.link) doc["link"] = *pack.link;
  if (pack.description) doc["description"] = *pack.description;
  return doc.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

std::string serialize_index(const std::vector<CorpusEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    arr.push_back(json{{"file", e.file}, {"hash", e.hash}, {"coarse", to_string(e.coarse)}});
  }
  return arr.dump(2) + "\n";
}

std::vector<CorpusEntry> parse_index(std::string_view raw) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::malformed_document, std::string(kIndexFileName), e.what());
  }
  if (!doc.is_array()) throw Error(Errc::schema_violation, std::string(kIndexFileName), "expected an array");
  std::vector<CorpusEntry> out;
  for (const auto& e : doc) {
    if (!e.is_object() || !e.contains("file") || !e.contains("hash") || !e.contains("coarse"))
      throw Error(Errc::schema_violation, std::string(kIndexFileName), "entry lacks file/hash/coarse");
    out.push_back(CorpusEntry{e["file"].get<std::string>(), e["hash"].get<std::string>(),
                              coarse_from_string(e["coarse"].get<std::string>())});
  }
  return out;
}

}  // namespace kdrift

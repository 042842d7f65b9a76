#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kdrift {

enum class CoarseLabel { api_migration, regression, optimisation_like };

enum class FineLabel {
  deprecation,
  transfer,
  rename,
  removal,
  simplification,
  optimisation,
  security,
  regression,
  hygiene,
};

enum class LabelOrigin { human, propagated };

inline constexpr FineLabel kAllFineLabels[] = {
    FineLabel::deprecation,    FineLabel::transfer,     FineLabel::rename,
    FineLabel::removal,        FineLabel::simplification, FineLabel::optimisation,
    FineLabel::security,       FineLabel::regression,   FineLabel::hygiene,
};

std::string_view to_string(CoarseLabel label) noexcept;
std::string_view to_string(FineLabel label) noexcept;
std::string_view to_string(LabelOrigin origin) noexcept;

/// Throws Error(unknown_label).
CoarseLabel coarse_from_string(std::string_view name);
FineLabel fine_from_string(std::string_view name);
LabelOrigin origin_from_string(std::string_view name);

/// Nine fine labels onto the consolidated coarse set. Everything except
/// regression folds into api_migration; optimisation_like is reserved.
CoarseLabel consolidate_label(FineLabel fine) noexcept;
/// String form; throws Error(unknown_label) for names outside the nine.
CoarseLabel consolidate_label(std::string_view fine);

struct TaxonomyLabel {
  CoarseLabel coarse = CoarseLabel::api_migration;
  std::optional<FineLabel> fine;
  double confidence = 1.0;
  LabelOrigin origin = LabelOrigin::human;

  static TaxonomyLabel human(FineLabel fine);

  friend bool operator==(const TaxonomyLabel&, const TaxonomyLabel&) = default;
};

/// Empty when the label satisfies its invariants, else the first broken rule.
std::optional<std::string> check_label(const TaxonomyLabel& label);

struct ValidationPlan {
  std::vector<std::string> functional_checks;
  std::vector<std::string> security_checks;

  friend bool operator==(const ValidationPlan&, const ValidationPlan&) = default;
};

/// Throws Error(invariant_violation) on duplicate check ids.
void check_plan(const ValidationPlan& plan);

struct CasePack {
  std::string message;
  std::vector<std::string> files;
  std::string patch;
  std::string hash;
  std::string kernel_hash;
  TaxonomyLabel type_label;
  std::map<std::string, std::string> contents;
  std::optional<std::string> link;
  std::optional<std::string> description;

  friend bool operator==(const CasePack&, const CasePack&) = default;
};

/// Throws Error(invariant_violation) naming the broken rule.
void check_invariants(const CasePack& pack);

/// Throws Error(malformed_document | schema_violation | invariant_violation).
/// A schema violation's subject is the offending JSON key.
CasePack parse_case_pack(std::string_view raw);

/// Sorted keys, two-space indent, trailing newline.
std::string serialize_case_pack(const CasePack& pack);

struct CorpusEntry {
  std::string file;  // relative to the corpus directory
  std::string hash;
  CoarseLabel coarse = CoarseLabel::api_migration;

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

inline constexpr std::string_view kIndexFileName = "index.json";

std::string serialize_index(const std::vector<CorpusEntry>& entries);
std::vector<CorpusEntry> parse_index(std::string_view raw);

}  // namespace kdrift

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "kdrift/error.hpp"
#include "kdrift/syntax.hpp"
#include "kdrift/udiff.hpp"

namespace kdrift::astcmp {

using Count = std::int64_t;
using DeltaMap = std::map<std::string, Count>;

struct NodeTypeCounts {
  std::map<std::string, Count> counts;  // zero entries never stored

  Count operator[](const std::string& kind) const {
    auto it = counts.find(kind);
    return it == counts.end() ? 0 : it->second;
  }
  NodeTypeCounts& operator+=(const NodeTypeCounts& other);

  friend bool operator==(const NodeTypeCounts&, const NodeTypeCounts&) = default;
};

/// Counts every node of the concrete syntax tree below the translation unit,
/// named and anonymous alike.
NodeTypeCounts count_node_types(syntax::CParser& parser, std::string_view source);
NodeTypeCounts count_node_types(std::string_view source);

/// patched - base per kind; kinds whose difference is zero are omitted.
DeltaMap node_delta(const NodeTypeCounts& base, const NodeTypeCounts& patched);

/// 1 - |dref - dgen| / max(|dref|, |dgen|), clamped to [0, 1].
/// Throws Error(undefined_similarity) when both deltas are zero.
template <typename Real = double>
Real node_sim(Count dref, Count dgen) {
  const Count scale = std::max(std::llabs(dref), std::llabs(dgen));
  if (scale == 0) throw Error(Errc::undefined_similarity, {}, "both deltas are zero");
  const Real raw = Real(1) - static_cast<Real>(std::llabs(dref - dgen)) / static_cast<Real>(scale);
  return std::clamp(raw, Real(0), Real(1));
}

struct NodeDeltaProfile {
  DeltaMap delta_ref;
  DeltaMap delta_gen;
  std::map<std::string, Count> weights;   // max(|delta_ref|, |delta_gen|), only > 0
  std::map<std::string, double> node_sims;

  friend bool operator==(const NodeDeltaProfile&, const NodeDeltaProfile&) = default;
};

NodeDeltaProfile make_profile(const DeltaMap& delta_ref, const DeltaMap& delta_gen);

/// Weighted mean of node_sims by weights; 1.0 when no kind changed.
double ast_similarity(const NodeDeltaProfile& profile);

struct AstSimilarity {
  double score = 1.0;
  NodeDeltaProfile profile;
};

AstSimilarity ast_similarity(std::string_view base, std::string_view ref_patched, std::string_view gen_patched);
AstSimilarity ast_similarity(const NodeTypeCounts& base, const NodeTypeCounts& ref_patched,
                             const NodeTypeCounts& gen_patched);

/// Modified elements between two versions of a file: names that appear in
/// only one version or whose occurrences changed.
struct SemanticElements {
  std::set<std::string> functions;
  std::multiset<std::string> calls;  // one entry per changed call site
  std::set<std::string> variables;
  std::set<std::string> macros;

  SemanticElements& operator+=(const SemanticElements& other);
  friend bool operator==(const SemanticElements&, const SemanticElements&) = default;
};

SemanticElements extract_semantic_elements(syntax::CParser& parser, std::string_view base, std::string_view patched);
SemanticElements extract_semantic_elements(std::string_view base, std::string_view patched);

/// Jaccard index; 1.0 when both are empty.
template <typename Set>
double element_accuracy(const Set& ref, const Set& gen) {
  std::set<typename Set::value_type> a(ref.begin(), ref.end());
  std::set<typename Set::value_type> b(gen.begin(), gen.end());
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  for (const auto& x : a) common += b.count(x);
  const std::size_t joint = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(joint);
}

struct CompositeWeights {
  static constexpr double ast = 0.30;
  static constexpr double func = 0.25;
  static constexpr double call = 0.20;
  static constexpr double node = 0.15;
  static constexpr double var = 0.10;
};

/// Throws Error(out_of_range_metric) when an input lies outside [0, 1].
template <typename Real = double>
Real composite_score(Real ast, Real func, Real call, Real node, Real var) {
  const Real metrics[] = {ast, func, call, node, var};
  constexpr const char* names[] = {"ast_sim", "func_acc", "call_acc", "node_acc", "var_acc"};
  for (int i = 0; i < 5; ++i) {
    if (!(metrics[i] >= Real(0) && metrics[i] <= Real(1)))
      throw Error(Errc::out_of_range_metric, names[i], "metric outside [0,1]");
  }
  return Real(CompositeWeights::ast) * ast + Real(CompositeWeights::func) * func +
         Real(CompositeWeights::call) * call + Real(CompositeWeights::node) * node +
         Real(CompositeWeights::var) * var;
}

struct StaticScoreReport {
  double ast_sim = 1.0;
  double func_acc = 1.0;
  double call_acc = 1.0;
  double node_acc = 1.0;
  double var_acc = 1.0;
  double composite = 1.0;
  NodeDeltaProfile profile;
};

/// Scores two post-patch source sets against their shared baseline. Counts
/// and elements are pooled over every path present in any of the three maps.
StaticScoreReport score_sources(const udiff::SourceMap& base, const udiff::SourceMap& ref_patched,
                                const udiff::SourceMap& gen_patched);

/// Applies both patches (with hunk reconstruction fallback) and scores them.
StaticScoreReport score_patches(const udiff::SourceMap& base, std::string_view ref_patch,
                                std::string_view gen_patch, std::size_t fuzz = udiff::kDefaultFuzz);

std::string to_json(const StaticScoreReport& report);

}  // namespace kdrift::astcmp

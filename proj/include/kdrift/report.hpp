#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kdrift/casepack.hpp"
#include "kdrift/looporch.hpp"

namespace kdrift::report {

struct CategoryCounts {
  std::size_t n_cases = 0;
  std::size_t n_generated = 0;
  std::size_t n_gate_passed = 0;
  std::size_t n_compiled = 0;  // compiled or runtime validated
  std::size_t n_runtime_validated = 0;

  /// n_compiled / n_cases, 0 for an empty category.
  double compilation_rate() const;
  bool monotone() const;
  CategoryCounts& operator+=(const CategoryCounts& other);
  friend bool operator==(const CategoryCounts&, const CategoryCounts&) = default;
};

using MetricMap = std::map<std::string, double>;

struct BatchReport {
  std::map<CoarseLabel, CategoryCounts> per_category;
  CategoryCounts totals;
  std::map<std::string, MetricMap> scores;  // case hash -> metric -> value
};

BatchReport aggregate(const std::vector<loop::SessionSummary>& sessions);
BatchReport aggregate(const std::vector<loop::AdaptationSession>& sessions,
                      const std::map<std::string, MetricMap>& scores);

struct StatSummary {
  double mean = 0.0;
  double median = 0.0;
  double p25 = 0.0;
  double p75 = 0.0;
  std::size_t n = 0;
};

/// Linear interpolation between order statistics (type 7). `sorted` must be
/// ascending and non-empty; q in [0,1].
double quantile(const std::vector<double>& sorted, double q);

/// Throws Error(empty_input).
StatSummary distribution(std::vector<double> values);

struct WelchResult {
  double t = 0.0;
  double dof = 0.0;
};

/// Throws Error(insufficient_data) when either sample has fewer than two
/// values, Error(degenerate_variance) when both variances are zero.
WelchResult welch_t(const std::vector<double>& a, const std::vector<double>& b);

/// Pooled standard deviation weighted by n-1. Same errors as welch_t.
double cohens_d(const std::vector<double>& a, const std::vector<double>& b);

/// Values of one metric over every scored case, in case-hash order.
std::vector<double> metric_values(const BatchReport& report, std::string_view metric);

inline constexpr std::string_view kTableMetrics[] = {"ast_sim", "func_acc", "call_acc", "node_acc", "var_acc",
                                                     "composite"};
inline constexpr std::string_view kComparedMetrics[] = {"composite", "ast_sim"};

/// One batch of session logs, e.g. one generation backend.
struct PatchSet {
  std::string name;
  BatchReport report;
};

std::string report_to_json(const std::vector<PatchSet>& sets);
std::string render_table(const std::vector<PatchSet>& sets);

}  // namespace kdrift::report

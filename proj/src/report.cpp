#include "kdrift/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <json.hpp>

#include "kdrift/error.hpp"

namespace kdrift::report {

using nlohmann::json;

double CategoryCounts::compilation_rate() const {
  return n_cases == 0 ? 0.0 : static_cast<double>(n_compiled) / static_cast<double>(n_cases);
}

bool CategoryCounts::monotone() const {
  return n_cases >= n_generated && n_generated >= n_gate_passed && n_gate_passed >= n_compiled &&
         n_compiled >= n_runtime_validated;
}

CategoryCounts& CategoryCounts::operator+=(const CategoryCounts& o) {
  n_cases += o.n_cases;
  n_generated += o.n_generated;
  n_gate_passed += o.n_gate_passed;
  n_compiled += o.n_compiled;
  n_runtime_validated += o.n_runtime_validated;
  return *this;
}

BatchReport aggregate(const std::vector<loop::SessionSummary>& sessions) {
  BatchReport r;
  for (const auto& s : sessions) {
    CategoryCounts c;
    c.n_cases = 1;
    c.n_generated = s.generated;
    c.n_gate_passed = s.gate_passed;
    c.n_compiled = s.outcome == loop::Outcome::compiled || s.outcome == loop::Outcome::runtime_validated;
    c.n_runtime_validated = s.outcome == loop::Outcome::runtime_validated;
    r.per_category[s.coarse] += c;
    r.totals += c;
    if (s.score) r.scores[s.hash] = *s.score;
  }
  return r;
}

BatchReport aggregate(const std::vector<loop::AdaptationSession>& sessions,
                      const std::map<std::string, MetricMap>& scores) {
  std::vector<loop::SessionSummary> summaries;
  for (const auto& s : sessions) {
    auto sum = loop::summarize_session(s);
    if (auto it = scores.find(s.pack.hash); it != scores.end()) sum.score = it->second;
    summaries.push_back(std::move(sum));
  }
  return aggregate(summaries);
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw Error(Errc::empty_input, "quantile");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

StatSummary distribution(std::vector<double> values) {
  if (values.empty()) throw Error(Errc::empty_input, "distribution");
  std::sort(values.begin(), values.end());
  StatSummary s;
  s.n = values.size();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
  s.p25 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.p75 = quantile(values, 0.75);
  return s;
}

namespace {

struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double var = 0.0;  // n-1 denominator
};

Moments moments(const std::vector<double>& v, const char* which) {
  if (v.size() < 2) throw Error(Errc::insufficient_data, which, "need at least two values");
  Moments m;
  m.n = static_cast<double>(v.size());
  m.mean = std::accumulate(v.begin(), v.end(), 0.0) / m.n;
  double ss = 0.0;
  for (double x : v) ss += (x - m.mean) * (x - m.mean);
  m.var = ss / (m.n - 1.0);
  return m;
}

}  // namespace

WelchResult welch_t(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ma = moments(a, "a");
  const auto mb = moments(b, "b");
  if (ma.var == 0.0 && mb.var == 0.0) throw Error(Errc::degenerate_variance, "welch_t");
  const double qa = ma.var / ma.n;
  const double qb = mb.var / mb.n;
  WelchResult r;
  r.t = (ma.mean - mb.mean) / std::sqrt(qa + qb);
  r.dof = (qa + qb) * (qa + qb) / (qa * qa / (ma.n - 1.0) + qb * qb / (mb.n - 1.0));
  return r;
}

double cohens_d(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ma = moments(a, "a");
  const auto mb = moments(b, "b");
  if (ma.var == 0.0 && mb.var == 0.0) throw Error(Errc::degenerate_variance, "cohens_d");
  const double pooled = std::sqrt(((ma.n - 1.0) * ma.var + (mb.n - 1.0) * mb.var) / (ma.n + mb.n - 2.0));
  return (ma.mean - mb.mean) / pooled;
}

std::vector<double> metric_values(const BatchReport& report, std::string_view metric) {
  std::vector<double> out;
  for (const auto& [hash, m] : report.scores)
    if (auto it = m.find(std::string(metric)); it != m.end()) out.push_back(it->second);
  return out;
}

namespace {

json counts_json(const CategoryCounts& c) {
  return {{"n_cases", c.n_cases},
          {"n_generated", c.n_generated},
          {"n_gate_passed", c.n_gate_passed},
          {"n_compiled", c.n_compiled},
          {"n_runtime_validated", c.n_runtime_validated},
          {"compilation_rate", c.compilation_rate()}};
}

json distribution_json(const std::vector<double>& values) {
  if (values.empty()) return nullptr;
  auto s = distribution(values);
  const auto perfect = std::count_if(values.begin(), values.end(), [](double v) { return v >= 1.0 - 1e-9; });
  const auto high = std::count_if(values.begin(), values.end(), [](double v) { return v >= 0.8; });
  return {{"n", s.n},       {"mean", s.mean}, {"median", s.median}, {"p25", s.p25},
          {"p75", s.p75},   {"n_perfect", perfect}, {"n_at_least_0.8", high}};
}

}  // namespace

std::string report_to_json(const std::vector<PatchSet>& sets) {
  json out = json::object();
  json jsets = json::array();
  for (const auto& set : sets) {
    json per = json::object();
    for (const auto& [label, c] : set.report.per_category) per[std::string(to_string(label))] = counts_json(c);
    json dists = json::object();
    for (auto m : kTableMetrics) dists[std::string(m)] = distribution_json(metric_values(set.report, m));
    jsets.push_back({{"name", set.name},
                     {"per_category", std::move(per)},
                     {"totals", counts_json(set.report.totals)},
                     {"distributions", std::move(dists)},
                     {"scores", set.report.scores}});
  }
  out["patch_sets"] = std::move(jsets);
  if (sets.size() >= 2) {
    json cmp = json::object();
    for (auto m : kComparedMetrics) {
      const auto a = metric_values(sets[0].report, m);
      const auto b = metric_values(sets[1].report, m);
      json entry = {{"a", sets[0].name}, {"b", sets[1].name}};
      try {
        auto w = welch_t(a, b);
        entry["welch_t"] = w.t;
        entry["dof"] = w.dof;
        entry["cohens_d"] = cohens_d(a, b);
      } catch (const Error& e) {
        entry["error"] = std::string(to_string(e.code()));
      }
      cmp[std::string(m)] = std::move(entry);
    }
    out["comparison"] = std::move(cmp);
  }
  return out.dump(2) + "\n";
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_table(const std::vector<PatchSet>& sets) {
  static const std::map<std::string_view, std::string> kNames = {
      {"ast_sim", "AST Similarity"}, {"func_acc", "Function Accuracy"}, {"call_acc", "Call Accuracy"},
      {"node_acc", "Node Accuracy"}, {"var_acc", "Variable Accuracy"}, {"composite", "Composite"}};
  constexpr std::size_t kFirst = 22;
  constexpr std::size_t kCol = 14;
  std::string out = pad("Metric", kFirst);
  for (const auto& s : sets) out += pad(s.name, kCol);
  out += "\n";
  for (auto m : kTableMetrics) {
    out += pad(kNames.at(m), kFirst);
    for (const auto& s : sets) {
      auto v = metric_values(s.report, m);
      out += pad(v.empty() ? "-" : fmt("%.3f", distribution(v).mean), kCol);
    }
    out += "\n";
  }
  out += "\n";
  out += pad("Category", kFirst);
  for (const auto& s : sets) out += pad(s.name, kCol);
  out += "\n";
  std::set<CoarseLabel> labels;
  for (const auto& s : sets)
    for (const auto& [l, _] : s.report.per_category) labels.insert(l);
  auto row = [&](const std::string& name, auto get) {
    out += pad(name, kFirst);
    for (const auto& s : sets) out += pad(get(s.report), kCol);
    out += "\n";
  };
  auto counts = [](const CategoryCounts& c) {
    return std::to_string(c.n_compiled) + "/" + std::to_string(c.n_cases) + " (" +
           fmt("%.1f", 100.0 * c.compilation_rate()) + "%)";
  };
  for (auto l : labels)
    row(std::string(to_string(l)), [&](const BatchReport& r) {
      auto it = r.per_category.find(l);
      return it == r.per_category.end() ? std::string("-") : counts(it->second);
    });
  row("total compiled", [&](const BatchReport& r) { return counts(r.totals); });
  row("generated", [](const BatchReport& r) { return std::to_string(r.totals.n_generated); });
  row("gate passed", [](const BatchReport& r) { return std::to_string(r.totals.n_gate_passed); });
  row("runtime validated", [](const BatchReport& r) { return std::to_string(r.totals.n_runtime_validated); });
  if (sets.size() >= 2) {
    out += "\n";
    for (auto m : kComparedMetrics) {
      const auto a = metric_values(sets[0].report, m);
      const auto b = metric_values(sets[1].report, m);
      out += std::string(m) + " " + sets[0].name + " vs " + sets[1].name + ": ";
      try {
        auto w = welch_t(a, b);
        out += "t=" + fmt("%.3f", w.t) + " dof=" + fmt("%.1f", w.dof) + " d=" + fmt("%.3f", cohens_d(a, b));
      } catch (const Error& e) {
        out += std::string(to_string(e.code()));
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace kdrift::report

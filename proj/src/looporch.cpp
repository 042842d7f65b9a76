#include "kdrift/looporch.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kdrift/error.hpp"
#include "kdrift/text.hpp"

namespace kdrift::loop {

using nlohmann::json;

std::string_view to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::stage1_patch_application: return "stage1_patch_application";
    case Stage::stage2_compilation: return "stage2_compilation";
    case Stage::passed: return "passed";
  }
  return "passed";
}

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::generated_only: return "generated_only";
    case Outcome::static_rejected: return "static_rejected";
    case Outcome::compiled: return "compiled";
    case Outcome::runtime_validated: return "runtime_validated";
    case Outcome::failed: return "failed";
  }
  return "failed";
}

Stage stage_from_string(std::string_view name) {
  for (auto s : {Stage::stage1_patch_application, Stage::stage2_compilation, Stage::passed})
    if (to_string(s) == name) return s;
  throw Error(Errc::unknown_label, std::string(name), "not a stage");
}

Outcome outcome_from_string(std::string_view name) {
  for (auto o : {Outcome::generated_only, Outcome::static_rejected, Outcome::compiled, Outcome::runtime_validated,
                 Outcome::failed})
    if (to_string(o) == name) return o;
  throw Error(Errc::unknown_label, std::string(name), "not an outcome");
}

// ---- static gate -----------------------------------------------------------

GateResult gate_decision(bool syntax_ok, std::optional<double> similarity, double threshold) {
  GateResult g;
  g.syntax_ok = syntax_ok;
  g.similarity = similarity;
  g.accepted = syntax_ok && (!similarity || *similarity >= threshold - 1e-12);
  if (!syntax_ok) g.problems.emplace_back("diff syntax");
  if (syntax_ok && similarity && !g.accepted) {
    std::ostringstream os;
    os << "similarity " << *similarity << " below threshold " << threshold;
    g.problems.push_back(os.str());
  }
  return g;
}

namespace {

template <typename T>
double jaccard(const std::multiset<T>& a, const std::multiset<T>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<T> inter, uni;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

std::multiset<std::string> changed_lines(const udiff::UnifiedDiff& d) {
  std::multiset<std::string> out;
  for (const auto& fd : d.file_diffs) {
    const std::string path = fd.target_path();
    for (const auto& h : fd.hunks)
      for (const auto& l : h.lines) {
        if (l.tag == udiff::LineTag::context) continue;
        out.insert(path + (l.tag == udiff::LineTag::add ? "\n+" : "\n-") + std::string(trim(l.text)));
      }
  }
  return out;
}

std::size_t hunk_count(const udiff::UnifiedDiff& d) {
  std::size_t n = 0;
  for (const auto& fd : d.file_diffs) n += fd.hunks.size();
  return n;
}

}  // namespace

GateLevels gate_levels(const udiff::UnifiedDiff& candidate, const udiff::UnifiedDiff& reference) {
  GateLevels lv;
  std::multiset<std::string> pc, pr;
  for (const auto& p : candidate.touched_paths()) pc.insert(p);
  for (const auto& p : reference.touched_paths()) pr.insert(p);
  lv.files = jaccard(pc, pr);
  const auto hc = hunk_count(candidate), hr = hunk_count(reference);
  lv.hunks = std::max(hc, hr) == 0 ? 1.0 : static_cast<double>(std::min(hc, hr)) / static_cast<double>(std::max(hc, hr));
  lv.lines = jaccard(changed_lines(candidate), changed_lines(reference));
  return lv;
}

GateResult static_gate(std::string_view candidate, std::optional<std::string_view> reference, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw Error(Errc::invalid_range, std::to_string(threshold));
  udiff::UnifiedDiff cand;
  std::vector<std::string> problems;
  bool syntax_ok = true;
  try {
    cand = udiff::parse_diff(candidate);
    auto verdict = udiff::validate_diff_syntax(cand);
    for (const auto& v : verdict.violations) problems.push_back(v.kind + ": " + v.detail);
    syntax_ok = verdict.ok();
  } catch (const Error& e) {
    syntax_ok = false;
    problems.emplace_back(e.what());
  }
  std::optional<double> similarity;
  if (syntax_ok && reference) {
    try {
      similarity = gate_levels(cand, udiff::parse_diff(*reference)).mean();
    } catch (const Error& e) {
      problems.push_back(std::string("reference: ") + e.what());
    }
  }
  auto g = gate_decision(syntax_ok, similarity, threshold);
  if (!syntax_ok) g.problems = problems.empty() ? g.problems : problems;
  return g;
}

// ---- diagnostics -----------------------------------------------------------

bool DiagnosticReport::has_errors() const {
  return std::any_of(messages.begin(), messages.end(),
                     [](const Diagnostic& d) { return d.severity == "error" || d.severity == "fatal error"; });
}

DiagnosticReport parse_diagnostics(int exit_code, std::string_view output) {
  static const std::regex line_re(R"(^(.+?):(\d+):(?:(\d+):)? (fatal error|error|warning|note): (.*)$)");
  DiagnosticReport rep;
  rep.exit_code = exit_code;
  for (auto line : split_lines(output)) {
    std::string l(line);
    std::smatch m;
    if (!std::regex_match(l, m, line_re)) continue;
    Diagnostic d;
    d.file = m[1].str();
    d.line = std::stoul(m[2].str());
    if (m[3].matched) d.column = std::stoul(m[3].str());
    d.severity = m[4].str();
    d.text = m[5].str();
    rep.messages.push_back(std::move(d));
  }
  rep.extracted_symbols = extract_symbols(output);
  return rep;
}

std::set<std::string> extract_symbols(std::string_view text) {
  static const std::string open = "(?:\xE2\x80\x98|'|`|\")";
  static const std::string close = "(?:\xE2\x80\x99|'|\")";
  static const std::string name = "([A-Za-z_][A-Za-z0-9_]*)";
  static const std::vector<std::regex> patterns = [] {
    std::vector<std::regex> p;
    for (const std::string& prefix :
         {std::string("implicit declaration of function "), std::string("unknown type name "),
          std::string("has no member named "), std::string("undefined reference to "),
          std::string("call to undeclared function "), std::string("use of undeclared identifier ")})
      p.emplace_back(prefix + open + name + close);
    p.emplace_back(open + name + close + " undeclared");
    return p;
  }();
  std::set<std::string> out;
  const std::string s(text);
  for (const auto& re : patterns)
    for (std::sregex_iterator it(s.begin(), s.end(), re), end; it != end; ++it) out.insert((*it)[1].str());
  return out;
}

DiagnosticReport run_build(const std::filesystem::path& workspace, BuildExecutor& executor) {
  return executor.build(workspace);
}

Stage classify_failure(const std::optional<std::string>& apply_error, const std::optional<DiagnosticReport>& report) {
  if (apply_error) return Stage::stage1_patch_application;
  if (!report) throw Error(Errc::invariant_violation, "classify_failure", "needs an apply error or a build report");
  if (report->exit_code != 0 || report->timed_out || report->has_errors()) return Stage::stage2_compilation;
  return Stage::passed;
}

std::string summarize_diagnostics(const DiagnosticReport& report, std::size_t max_errors) {
  std::string out;
  if (report.timed_out) out += "build timed out\n";
  std::size_t n = 0;
  for (const auto& d : report.messages) {
    if (d.severity != "error" && d.severity != "fatal error") continue;
    if (n++ == max_errors) break;
    out += d.file + ":" + std::to_string(d.line) + ": " + d.severity + ": " + d.text + "\n";
  }
  if (n == 0 && !report.timed_out) out += "build exited with status " + std::to_string(report.exit_code) + "\n";
  if (!report.extracted_symbols.empty()) {
    out += "symbols:";
    for (const auto& s : report.extracted_symbols) out += " " + s;
    out += "\n";
  }
  return out;
}

// ---- prompt ----------------------------------------------------------------

namespace {

const std::map<std::string, std::string>& builtin_templates() {
  static const std::map<std::string, std::string> t = {
      {"api_migration",
       "You are maintaining an out-of-tree Linux driver. A kernel change altered an interface the driver "
       "depends on. Update the driver call sites to the new interface and keep its behaviour unchanged."},
      {"deprecation",
       "You are maintaining an out-of-tree Linux driver. The kernel removed a deprecated API that the driver "
       "still calls. Replace each call with the recommended successor, dropping arguments the successor no "
       "longer takes."},
      {"rename",
       "You are maintaining an out-of-tree Linux driver. The kernel renamed symbols the driver uses. Rename "
       "the driver's references to match; do not change logic."},
      {"transfer",
       "You are maintaining an out-of-tree Linux driver. Kernel functionality moved to a different header or "
       "subsystem. Update includes and call sites to the new location."},
      {"removal",
       "You are maintaining an out-of-tree Linux driver. The kernel removed an interface without a drop-in "
       "successor. Rework the affected code paths with the smallest correct change."},
      {"regression",
       "You are maintaining a Linux driver. A recent change introduced a regression in the code shown. Fix "
       "the faulty path with a minimal patch and keep unrelated code untouched."},
  };
  return t;
}

std::optional<std::string> read_template(const std::optional<std::filesystem::path>& dir, std::string_view name) {
  if (!dir) return std::nullopt;
  auto p = *dir / (std::string(name) + ".txt");
  if (!std::filesystem::is_regular_file(p)) return std::nullopt;
  return std::string(trim_right(read_file(p)));
}

}  // namespace

std::string select_template(const TaxonomyLabel& label, const std::optional<std::filesystem::path>& template_dir) {
  std::vector<std::string> names;
  if (label.fine) names.emplace_back(to_string(*label.fine));
  names.emplace_back(to_string(label.coarse));
  for (const auto& n : names)
    if (auto t = read_template(template_dir, n)) return *t;
  for (const auto& n : names)
    if (auto it = builtin_templates().find(n); it != builtin_templates().end()) return it->second;
  throw Error(Errc::missing_template, names.front());
}

std::string assemble_prompt(const CasePack& pack, const std::vector<localize::ContextWindow>& windows,
                            std::string_view kernel_delta, const std::optional<std::filesystem::path>& template_dir) {
  std::string p = select_template(pack.type_label, template_dir);
  p += "\n\n## Taxonomy\ncoarse: ";
  p += to_string(pack.type_label.coarse);
  p += "\nfine: ";
  p += pack.type_label.fine ? to_string(*pack.type_label.fine) : std::string_view("unspecified");
  p += "\n\n## Kernel change\n```diff\n";
  p += kernel_delta;
  if (!kernel_delta.empty() && kernel_delta.back() != '\n') p += '\n';
  p += "```\n\n## Driver context\n";
  for (const auto& w : windows) {
    p += "### " + w.path + " lines " + std::to_string(w.start_line) + "-" + std::to_string(w.end_line);
    if (!w.focus_symbols.empty()) {
      p += " (focus:";
      for (const auto& s : w.focus_symbols) p += " " + s;
      p += ")";
    }
    p += "\n```c\n" + w.text;
    if (!w.text.empty() && w.text.back() != '\n') p += '\n';
    p += "```\n";
  }
  p += "\n## Driver commit message\n";
  p += pack.message;
  p += "\n\n## Output\nReply with a single unified diff against the driver sources (--- a/<path>, +++ b/<path>, "
       "@@ hunks with three lines of context). Do not include prose or whole files.\n";
  return p;
}

std::vector<localize::ContextWindow> localize_case(const CasePack& pack, std::string_view kernel_delta,
                                                   std::size_t pad) {
  udiff::SourceMap sources;
  for (const auto& [path, text] : pack.contents) {
    auto ext = std::filesystem::path(path).extension();
    if (ext == ".c" || ext == ".h") sources[path] = text;
  }
  auto idx = localize::index_symbols(sources);

  std::set<std::string> symbols;
  if (!kernel_delta.empty()) {
    try {
      for (const auto& fd : udiff::parse_diff(kernel_delta).file_diffs)
        for (const auto& h : fd.hunks)
          for (const auto& l : h.lines)
            if (l.tag != udiff::LineTag::context)
              for (const auto& s : localize::lexical_callees(l.text))
                if (idx.knows(s)) symbols.insert(s);
    } catch (const Error&) {
      symbols.clear();
    }
  }
  if (symbols.empty())
    for (const auto& [name, defs] : idx.definitions)
      if (std::any_of(defs.begin(), defs.end(),
                      [](const auto& d) { return d.kind == localize::SymbolKind::function; }))
        symbols.insert(name);
  return localize::extract_context(sources, idx, symbols, pad);
}

// ---- loop ------------------------------------------------------------------

void LoopConfig::check() const {
  if (max_attempts < 1 || max_attempts > kMaxAttemptsCeiling)
    throw Error(Errc::invalid_range, "max_attempts", "must lie in 1.." + std::to_string(kMaxAttemptsCeiling));
  if (!(gate_threshold >= 0.0 && gate_threshold <= 1.0))
    throw Error(Errc::invalid_range, "gate_threshold", "must lie in [0,1]");
  check_plan(plan);
}

LoopConfig load_config(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_document, path.string(), e.what());
  }
  if (!j.is_object()) throw Error(Errc::schema_violation, path.string(), "expected an object");
  LoopConfig c;
  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) { return std::filesystem::path(p).is_absolute() ? std::filesystem::path(p) : base / p; };
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "max_attempts") c.max_attempts = v.get<std::size_t>();
      else if (key == "gate_threshold") c.gate_threshold = v.get<double>();
      else if (key == "gate_against_reference") c.gate_against_reference = v.get<bool>();
      else if (key == "fuzz") c.fuzz = v.get<std::size_t>();
      else if (key == "context_pad") c.context_pad = v.get<std::size_t>();
      else if (key == "template_dir") c.template_dir = resolve(v.get<std::string>());
      else if (key == "workspace_root") c.workspace_root = resolve(v.get<std::string>());
      else if (key == "functional_checks") c.plan.functional_checks = v.get<std::vector<std::string>>();
      else if (key == "security_checks") c.plan.security_checks = v.get<std::vector<std::string>>();
      else throw Error(Errc::schema_violation, key, "unknown config key");
    } catch (const json::exception& e) {
      throw Error(Errc::schema_violation, key, e.what());
    }
  }
  c.check();
  return c;
}

namespace {

std::filesystem::path make_workspace(const LoopConfig& config, const std::string& hash, std::size_t attempt) {
  static std::atomic<unsigned> counter{0};
  const auto root = config.workspace_root.value_or(std::filesystem::temp_directory_path());
  std::random_device rd;
  auto dir = root / ("kdrift-ws-" + hash.substr(0, 12) + "-" + std::to_string(attempt) + "-" +
                     std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(dir);
  return dir;
}

struct WorkspaceGuard {
  std::filesystem::path dir;
  ~WorkspaceGuard() {
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
};

}  // namespace

AdaptationSession run_adaptation_loop(const CasePack& pack, const KernelContext& kernel, GenerationBackend& generator,
                                      BuildExecutor* executor, const LoopConfig& config) {
  config.check();
  AdaptationSession s;
  s.pack = pack;
  s.kernel_pre_rev = kernel.pre_rev;
  s.kernel_post_rev = kernel.post_rev;
  s.kernel_delta = kernel.delta;
  s.max_attempts = config.max_attempts;
  s.outcome = Outcome::failed;

  const std::string base_prompt =
      assemble_prompt(pack, localize_case(pack, kernel.delta, config.context_pad), kernel.delta, config.template_dir);
  std::string feedback;
  bool finished = false;

  for (std::size_t i = 1; i <= config.max_attempts && !finished; ++i) {
    AttemptRecord a;
    a.index = i;
    const std::string prompt = feedback.empty() ? base_prompt : base_prompt + "\n" + feedback;
    a.prompt_digest = sha256_hex(prompt);
    auto fail = [&](std::string reason) {
      feedback = "## Previous attempt " + std::to_string(i) + " failed (" +
                 std::string(to_string(*a.stage)) + ")\n" + reason;
      if (feedback.back() != '\n') feedback += '\n';
      s.attempts.push_back(a);
    };

    try {
      a.candidate_patch = generator.generate(GenerationRequest{pack, i, prompt});
    } catch (const std::exception& e) {
      a.generator_error = e.what();
      a.stage = Stage::stage1_patch_application;
      fail(std::string("generation failed: ") + e.what());
      continue;
    }

    std::optional<std::string_view> reference;
    if (config.gate_against_reference) reference = pack.patch;
    a.gate = static_gate(a.candidate_patch, reference, config.gate_threshold);
    if (!a.gate.accepted) {
      std::string why = "static gate rejected the patch:";
      for (const auto& p : a.gate.problems) why += "\n  " + p;
      a.apply_error = why;
      a.stage = classify_failure(a.apply_error, std::nullopt);
      fail(why);
      continue;
    }

    udiff::SourceMap applied;
    try {
      applied = udiff::apply_with_fallback(pack.contents, udiff::parse_diff(a.candidate_patch), config.fuzz);
    } catch (const Error& e) {
      a.apply_error = e.what();
      a.stage = classify_failure(a.apply_error, std::nullopt);
      fail(std::string("patch did not apply: ") + e.what());
      continue;
    }
    s.final_sources = applied;

    if (!executor) {
      s.attempts.push_back(a);
      s.outcome = Outcome::generated_only;
      finished = true;
      break;
    }

    WorkspaceGuard ws{make_workspace(config, pack.hash, i)};
    for (const auto& [path, text] : applied) {
      std::filesystem::create_directories((ws.dir / path).parent_path());
      write_file(ws.dir / path, text);
    }
    try {
      a.build = run_build(ws.dir, *executor);
    } catch (const Error& e) {
      if (e.code() == Errc::timeout) {
        DiagnosticReport r;
        r.exit_code = -1;
        r.timed_out = true;
        a.build = r;
      } else if (e.code() == Errc::executor_unavailable) {
        s.aborted = e.what();
        s.outcome = Outcome::failed;
        return s;
      } else {
        throw;
      }
    }
    a.stage = classify_failure(std::nullopt, a.build);
    if (*a.stage == Stage::passed) {
      s.attempts.push_back(a);
      s.outcome = Outcome::compiled;
      finished = true;
      break;
    }
    fail(summarize_diagnostics(*a.build));
  }

  if (!finished && !executor) {
    const bool gate_rejected = std::any_of(s.attempts.begin(), s.attempts.end(), [](const AttemptRecord& a) {
      return !a.generator_error && !a.gate.accepted;
    });
    const bool passed_gate =
        std::any_of(s.attempts.begin(), s.attempts.end(), [](const AttemptRecord& a) { return a.gate.accepted; });
    if (gate_rejected && !passed_gate) s.outcome = Outcome::static_rejected;
  }
  return s;
}

AdaptationSession runtime_validate(AdaptationSession session, RuntimeRunner& runner, const ValidationPlan& plan) {
  if (session.outcome != Outcome::compiled)
    throw Error(Errc::invariant_violation, session.pack.hash, "runtime validation needs a compiled session");
  check_plan(plan);
  bool all = true;
  auto run = [&](const std::vector<std::string>& ids, const char* kind) {
    for (const auto& id : ids) {
      CheckResult r;
      try {
        r = runner.run_check(id, session.pack);
      } catch (const Error& e) {
        if (e.code() != Errc::timeout) throw;
        r.id = id;
        r.passed = false;
        r.timed_out = true;
        r.detail = e.what();
      }
      r.id = id;
      r.kind = kind;
      all = all && r.passed;
      session.checks.push_back(std::move(r));
    }
  };
  run(plan.functional_checks, "functional");
  run(plan.security_checks, "security");
  if (all) session.outcome = Outcome::runtime_validated;
  return session;
}

// ---- session log -----------------------------------------------------------

SessionSummary summarize_session(const AdaptationSession& session) {
  SessionSummary s;
  s.hash = session.pack.hash;
  s.coarse = session.pack.type_label.coarse;
  s.fine = session.pack.type_label.fine;
  s.outcome = session.outcome;
  s.attempts = session.attempts.size();
  s.max_attempts = session.max_attempts;
  s.aborted = session.aborted;
  s.checks = session.checks;
  for (const auto& a : session.attempts) {
    s.generated = s.generated || !a.generator_error.has_value();
    s.gate_passed = s.gate_passed || a.gate.accepted;
  }
  return s;
}

namespace {

json opt(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const GateResult& g) {
  return {{"syntax_ok", g.syntax_ok},
          {"similarity", g.similarity ? json(*g.similarity) : json(nullptr)},
          {"accepted", g.accepted},
          {"problems", g.problems}};
}

json to_json(const DiagnosticReport& r) {
  auto msgs = json::array();
  for (const auto& d : r.messages)
    msgs.push_back({{"severity", d.severity},
                    {"file", d.file},
                    {"line", d.line},
                    {"column", d.column ? json(*d.column) : json(nullptr)},
                    {"text", d.text}});
  return {{"exit_code", r.exit_code},
          {"timed_out", r.timed_out},
          {"messages", std::move(msgs)},
          {"extracted_symbols", r.extracted_symbols}};
}

json to_json(const CheckResult& c) {
  return {{"id", c.id}, {"kind", c.kind}, {"passed", c.passed}, {"timed_out", c.timed_out}, {"detail", c.detail}};
}

GateResult gate_from_json(const json& j) {
  GateResult g;
  g.syntax_ok = j.at("syntax_ok").get<bool>();
  if (!j.at("similarity").is_null()) g.similarity = j["similarity"].get<double>();
  g.accepted = j.at("accepted").get<bool>();
  g.problems = j.at("problems").get<std::vector<std::string>>();
  return g;
}

DiagnosticReport report_from_json(const json& j) {
  DiagnosticReport r;
  r.exit_code = j.at("exit_code").get<int>();
  r.timed_out = j.at("timed_out").get<bool>();
  for (const auto& m : j.at("messages")) {
    Diagnostic d;
    d.severity = m.at("severity").get<std::string>();
    d.file = m.at("file").get<std::string>();
    d.line = m.at("line").get<std::size_t>();
    if (!m.at("column").is_null()) d.column = m["column"].get<std::size_t>();
    d.text = m.at("text").get<std::string>();
    r.messages.push_back(std::move(d));
  }
  r.extracted_symbols = j.at("extracted_symbols").get<std::set<std::string>>();
  return r;
}

CheckResult check_from_json(const json& j) {
  return CheckResult{j.at("id").get<std::string>(), j.at("kind").get<std::string>(), j.at("passed").get<bool>(),
                     j.at("timed_out").get<bool>(), j.at("detail").get<std::string>()};
}

std::optional<std::string> opt_string(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::string>();
}

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

}  // namespace

std::string session_to_jsonl(const AdaptationSession& session, const std::optional<std::map<std::string, double>>& score) {
  std::string out;
  for (const auto& a : session.attempts) {
    json j = {{"type", "attempt"},
              {"case", session.pack.hash},
              {"index", a.index},
              {"prompt_digest", a.prompt_digest},
              {"candidate_patch", a.candidate_patch},
              {"gate", to_json(a.gate)},
              {"build", a.build ? to_json(*a.build) : json(nullptr)},
              {"stage", a.stage ? json(std::string(to_string(*a.stage))) : json(nullptr)},
              {"apply_error", opt(a.apply_error)},
              {"generator_error", opt(a.generator_error)}};
    out += dump(j) + "\n";
  }
  auto s = summarize_session(session);
  auto checks = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  json j = {{"type", "session"},
            {"case", s.hash},
            {"coarse", std::string(to_string(s.coarse))},
            {"fine", s.fine ? json(std::string(to_string(*s.fine))) : json(nullptr)},
            {"kernel_pre", opt(session.kernel_pre_rev)},
            {"kernel_post", session.kernel_post_rev},
            {"outcome", std::string(to_string(s.outcome))},
            {"attempts", s.attempts},
            {"max_attempts", s.max_attempts},
            {"generated", s.generated},
            {"gate_passed", s.gate_passed},
            {"aborted", opt(s.aborted)},
            {"checks", std::move(checks)},
            {"score", score ? json(*score) : json(nullptr)}};
  out += dump(j) + "\n";
  return out;
}

std::vector<SessionLog> parse_session_logs(std::string_view jsonl) {
  std::vector<SessionLog> logs;
  SessionLog current;
  std::string current_case;
  std::size_t lineno = 0;
  std::size_t last_attempt_line = 0;
  for (auto line : split_lines(jsonl)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(Errc::malformed_document, where, e.what());
    }
    try {
      const auto type = j.at("type").get<std::string>();
      const auto hash = j.at("case").get<std::string>();
      if (!current.attempts.empty() && hash != current_case)
        throw Error(Errc::malformed_document, where, "attempt lines for " + current_case + " lack a session line");
      current_case = hash;
      if (type == "attempt") {
        AttemptRecord a;
        a.index = j.at("index").get<std::size_t>();
        a.prompt_digest = j.at("prompt_digest").get<std::string>();
        a.candidate_patch = j.at("candidate_patch").get<std::string>();
        a.gate = gate_from_json(j.at("gate"));
        if (!j.at("build").is_null()) a.build = report_from_json(j["build"]);
        if (!j.at("stage").is_null()) a.stage = stage_from_string(j["stage"].get<std::string>());
        a.apply_error = opt_string(j, "apply_error");
        a.generator_error = opt_string(j, "generator_error");
        current.attempts.push_back(std::move(a));
        last_attempt_line = lineno;
      } else if (type == "session") {
        SessionSummary& s = current.summary;
        s.hash = hash;
        s.coarse = coarse_from_string(j.at("coarse").get<std::string>());
        if (!j.at("fine").is_null()) s.fine = fine_from_string(j["fine"].get<std::string>());
        s.outcome = outcome_from_string(j.at("outcome").get<std::string>());
        s.attempts = j.at("attempts").get<std::size_t>();
        s.max_attempts = j.at("max_attempts").get<std::size_t>();
        s.generated = j.at("generated").get<bool>();
        s.gate_passed = j.at("gate_passed").get<bool>();
        s.aborted = opt_string(j, "aborted");
        for (const auto& c : j.at("checks")) s.checks.push_back(check_from_json(c));
        if (!j.at("score").is_null()) s.score = j["score"].get<std::map<std::string, double>>();
        if (s.attempts != current.attempts.size())
          throw Error(Errc::malformed_document, where,
                      "session declares " + std::to_string(s.attempts) + " attempts but " +
                          std::to_string(current.attempts.size()) + " precede it");
        logs.push_back(std::move(current));
        current = SessionLog{};
        current_case.clear();
      } else {
        throw Error(Errc::malformed_document, where, "unknown record type " + type);
      }
    } catch (const json::exception& e) {
      throw Error(Errc::malformed_document, where, e.what());
    } catch (const Error& e) {
      if (e.code() == Errc::malformed_document) throw;
      throw Error(Errc::malformed_document, where, e.what());
    }
  }
  if (!current.attempts.empty())
    throw Error(Errc::malformed_document, std::to_string(last_attempt_line), "log ends without a session line");
  return logs;
}

}  // namespace kdrift::loop

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdrift/astcmp.hpp"
#include "kdrift/casepack.hpp"
#include "kdrift/embedcluster.hpp"
#include "kdrift/error.hpp"
#include "kdrift/looporch.hpp"
#include "kdrift/mining.hpp"
#include "kdrift/process.hpp"
#include "kdrift/report.hpp"
#include "kdrift/text.hpp"
#include "kdrift/udiff.hpp"

namespace fs = std::filesystem;
using namespace kdrift;

namespace {

enum Exit { ok = 0, usage = 1, input = 2, patch = 3, executor = 4 };

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::empty_input:
    case Errc::malformed_header:
    case Errc::truncated_hunk:
    case Errc::patch_apply_failure:
    case Errc::reconstruction_failure:
      return patch;
    case Errc::executor_unavailable:
    case Errc::runner_unavailable:
      return executor;
    default:
      return input;
  }
}

int fail(const std::string& stage, const Error& e) {
  std::cerr << "kdrift " << stage << ": " << to_string(e.code()) << ": " << e.what() << "\n";
  return exit_for(e);
}

// ---- mine ------------------------------------------------------------------

struct MineArgs {
  std::string repo;
  std::string out;
  mining::MineOptions options;
};

int cmd_mine(const MineArgs& a) {
  std::unique_ptr<mining::GitRepository> repo;
  try {
    repo = std::make_unique<mining::GitRepository>(a.repo);
  } catch (const Error& e) {
    std::cerr << "kdrift mine: repository unavailable: " << a.repo << "\n";
    return input;
  }
  try {
    mining::parse_day(a.options.since);
    mining::parse_day(a.options.until);
    mining::KeywordClassifier classifier;
    embed::HashedBagOfTokens provider;
    auto s = mining::mine(*repo, classifier, provider, a.options, a.out);
    std::cout << "candidates " << s.candidates << "\n"
              << "retained " << s.retained << "\n"
              << "deduped " << s.deduped << "\n"
              << "linked " << s.linked << "\n"
              << "exported " << s.exported << "\n";
    for (const auto& skip : s.skipped) std::cerr << "skipped " << skip << "\n";
    return ok;
  } catch (const Error& e) {
    return fail("mine", e);
  }
}

// ---- score -----------------------------------------------------------------

struct ScoreArgs {
  std::string baseline;
  std::string ref;
  std::string gen;
  std::size_t fuzz = udiff::kDefaultFuzz;
};

int cmd_score(const ScoreArgs& a) {
  if (!fs::exists(a.baseline)) {
    std::cerr << "kdrift score: missing baseline: " << a.baseline << "\n";
    return input;
  }
  for (const auto& p : {a.ref, a.gen})
    if (!fs::is_regular_file(p)) {
      std::cerr << "kdrift score: missing patch: " << p << "\n";
      return input;
    }
  try {
    const auto ref = read_file(a.ref);
    const auto gen = read_file(a.gen);
    udiff::SourceMap base;
    if (fs::is_directory(a.baseline)) {
      for (const auto& e : fs::recursive_directory_iterator(a.baseline))
        if (e.is_regular_file()) base[fs::relative(e.path(), a.baseline).generic_string()] = read_file(e.path());
    } else {
      auto paths = udiff::parse_diff(ref).touched_paths();
      if (paths.size() != 1) {
        std::cerr << "kdrift score: a single baseline file needs a single-file reference patch\n";
        return input;
      }
      base[paths.front()] = read_file(a.baseline);
    }
    std::cout << astcmp::to_json(astcmp::score_patches(base, ref, gen, a.fuzz)) << "\n";
    return ok;
  } catch (const Error& e) {
    return fail("score", e);
  }
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
  std::string corpus;
  std::string logs;
  std::string backend = "mock";
  std::string endpoint;
  std::string model;
  std::string build = "cc";
  std::string compiler = "cc";
  std::vector<std::string> include_dirs;
  std::string kernel_repo;
  std::string build_command;
  std::string runner = "none";
  std::string runner_command;
  std::string config;
  std::size_t max_attempts = loop::kDefaultMaxAttempts;
  double threshold = loop::kDefaultGateThreshold;
  std::size_t fuzz = udiff::kDefaultFuzz;
  std::size_t jobs = 1;
  bool no_reference_gate = false;
};

std::unique_ptr<loop::GenerationBackend> make_backend(const RunArgs& a) {
  if (a.backend == "mock") return std::make_unique<loop::ReferenceGenerator>();
  if (a.backend == "mock-fail") return std::make_unique<loop::MalformedGenerator>();
  if (starts_with(a.backend, "scripted:"))
    return std::make_unique<loop::ScriptedGenerator>(loop::ScriptedGenerator::from_file(a.backend.substr(9)));
  if (a.backend == "http") {
    loop::HttpChatGenerator::Options o;
    o.endpoint = a.endpoint;
    o.model = a.model;
    return std::make_unique<loop::HttpChatGenerator>(o);
  }
  throw Error(Errc::invalid_range, a.backend, "unknown backend");
}

/// Kernel headers at one revision, materialized once and shared by sessions.
class KernelHeaders {
 public:
  KernelHeaders(fs::path repo, fs::path root) : repo_(std::move(repo)), root_(std::move(root)) {}

  fs::path include_dir(const std::string& rev) {
    std::lock_guard lock(mu_);
    auto dir = root_ / rev;
    if (done_.insert(rev).second) {
      mining::GitRepository git(repo_);
      auto r = run_process({"git", "-C", repo_.string(), "ls-tree", "-r", "-z", "--name-only", rev, "--", "include"});
      if (r.exit_code != 0) throw Error(Errc::unknown_commit, rev, r.err);
      std::size_t start = 0;
      for (std::size_t i = 0; i < r.out.size(); ++i) {
        if (r.out[i] != '\0') continue;
        const std::string path = r.out.substr(start, i - start);
        start = i + 1;
        if (auto text = git.read_file(rev, path)) {
          fs::create_directories((dir / path).parent_path());
          write_file(dir / path, *text);
        }
      }
    }
    return dir / "include";
  }

 private:
  fs::path repo_;
  fs::path root_;
  std::mutex mu_;
  std::set<std::string> done_;
};

struct CaseResult {
  std::string hash;
  CoarseLabel coarse = CoarseLabel::api_migration;
  std::string log;
  loop::SessionSummary summary;
  std::optional<std::string> error;
};

std::optional<report::MetricMap> score_session(const loop::AdaptationSession& s, std::size_t fuzz) {
  if (s.final_sources.empty()) return std::nullopt;
  try {
    auto ref = udiff::apply_with_fallback(s.pack.contents, udiff::parse_diff(s.pack.patch), fuzz);
    auto r = astcmp::score_sources(s.pack.contents, ref, s.final_sources);
    return report::MetricMap{{"ast_sim", r.ast_sim},   {"func_acc", r.func_acc}, {"call_acc", r.call_acc},
                             {"node_acc", r.node_acc}, {"var_acc", r.var_acc},   {"composite", r.composite}};
  } catch (const Error&) {
    return std::nullopt;
  }
}

int cmd_run(const RunArgs& a, const CLI::App& app) {
  try {
    loop::LoopConfig config;
    if (!a.config.empty()) config = loop::load_config(a.config);
    if (app.count("--max-attempts") || a.config.empty()) config.max_attempts = a.max_attempts;
    if (app.count("--threshold") || a.config.empty()) config.gate_threshold = a.threshold;
    if (app.count("--fuzz") || a.config.empty()) config.fuzz = a.fuzz;
    if (a.no_reference_gate) config.gate_against_reference = false;
    config.check();

    const fs::path corpus(a.corpus);
    const auto entries = parse_index(read_file(corpus / kIndexFileName));
    const fs::path logs = a.logs.empty() ? corpus / "sessions" : fs::path(a.logs);
    fs::create_directories(logs);

    std::optional<fs::path> scratch;
    std::unique_ptr<KernelHeaders> headers;
    if (!a.kernel_repo.empty()) {
      scratch = fs::temp_directory_path() / ("kdrift-kernel-" + std::to_string(std::random_device{}()));
      headers = std::make_unique<KernelHeaders>(a.kernel_repo, *scratch);
    }

    std::vector<CaseResult> results(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < entries.size();) {
        auto& out = results[i];
        out.hash = entries[i].hash;
        out.coarse = entries[i].coarse;
        try {
          const auto file = corpus / entries[i].file;
          auto pack = parse_case_pack(read_file(file));
          loop::KernelContext kernel{std::nullopt, pack.kernel_hash, ""};
          if (auto side = file.parent_path() / mining::kernel_sidecar_name(pack.hash); fs::exists(side)) {
            auto link = mining::parse_kernel_link(read_file(side));
            kernel = {link.pre_rev, link.post_rev, link.delta};
          }
          auto generator = make_backend(a);
          std::unique_ptr<loop::BuildExecutor> exec;
          if (a.build == "cc") {
            loop::LocalCompilerExecutor::Options o;
            o.compiler = a.compiler;
            for (const auto& d : a.include_dirs) o.include_dirs.emplace_back(d);
            if (headers) o.include_dirs.push_back(headers->include_dir(kernel.post_rev));
            exec = std::make_unique<loop::LocalCompilerExecutor>(o);
          } else if (a.build == "command") {
            exec = std::make_unique<loop::CommandExecutor>(a.build_command);
          }
          auto session = loop::run_adaptation_loop(pack, kernel, *generator, exec.get(), config);
          if (session.outcome == loop::Outcome::compiled && a.runner != "none") {
            std::unique_ptr<loop::RuntimeRunner> runner;
            if (a.runner == "mock") runner = std::make_unique<loop::MockRunner>();
            else runner = std::make_unique<loop::CommandRunner>(a.runner_command);
            session = loop::runtime_validate(std::move(session), *runner, config.plan);
          }
          auto score = score_session(session, config.fuzz);
          out.log = loop::session_to_jsonl(session, score);
          out.summary = loop::summarize_session(session);
          out.summary.score = score;
        } catch (const Error& e) {
          out.error = std::string(to_string(e.code())) + ": " + e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::max<std::size_t>(a.jobs, 1); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (scratch) fs::remove_all(*scratch);

    std::vector<loop::SessionSummary> summaries;
    int status = ok;
    for (const auto& r : results) {
      if (r.error) {
        std::cerr << "kdrift run: " << r.hash << ": " << *r.error << "\n";
        status = std::max(status, static_cast<int>(input));
        continue;
      }
      write_file(logs / (r.hash + ".jsonl"), r.log);
      summaries.push_back(r.summary);
      if (r.summary.aborted) {
        std::cerr << "kdrift run: " << r.hash << ": executor unavailable: " << *r.summary.aborted << "\n";
        status = executor;
      }
    }
    auto rep = report::aggregate(summaries);
    std::cout << "category cases generated gate_passed compiled runtime_validated\n";
    auto line = [](const std::string& name, const report::CategoryCounts& c) {
      std::cout << name << " " << c.n_cases << " " << c.n_generated << " " << c.n_gate_passed << " " << c.n_compiled
                << " " << c.n_runtime_validated << "\n";
    };
    for (const auto& [label, c] : rep.per_category) line(std::string(to_string(label)), c);
    line("total", rep.totals);
    return status;
  } catch (const Error& e) {
    return fail("run", e);
  }
}

// ---- report ----------------------------------------------------------------

int cmd_report(const std::vector<std::string>& paths, bool table) {
  std::vector<report::PatchSet> sets;
  for (const auto& p : paths) {
    std::vector<fs::path> files;
    if (fs::is_directory(p)) {
      for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".jsonl") files.push_back(e.path());
      std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(p)) {
      files.emplace_back(p);
    } else {
      std::cerr << "kdrift report: no such log: " << p << "\n";
      return input;
    }
    std::vector<loop::SessionSummary> summaries;
    for (const auto& f : files) {
      try {
        for (auto& log : loop::parse_session_logs(read_file(f))) summaries.push_back(std::move(log.summary));
      } catch (const Error& e) {
        std::cerr << "kdrift report: " << f.string() << ":" << e.subject() << ": malformed log line: " << e.what()
                  << "\n";
        return input;
      }
    }
    auto name = fs::path(p).filename().string();
    if (name.empty()) name = fs::path(p).parent_path().filename().string();
    sets.push_back({name, report::aggregate(summaries)});
  }
  std::cout << (table ? report::render_table(sets) : report::report_to_json(sets));
  return ok;
}

// ---- validate --------------------------------------------------------------

int cmd_validate(const std::string& path) {
  try {
    std::size_t n = 0;
    if (fs::is_directory(path)) {
      for (const auto& e : parse_index(read_file(fs::path(path) / kIndexFileName))) {
        try {
          auto pack = parse_case_pack(read_file(fs::path(path) / e.file));
          if (pack.hash != e.hash || pack.type_label.coarse != e.coarse)
            throw Error(Errc::invariant_violation, e.file, "index entry disagrees with the pack");
        } catch (const Error& err) {
          std::cerr << "kdrift validate: " << e.file << ": " << to_string(err.code()) << ": " << err.what() << "\n";
          return input;
        }
        ++n;
      }
    } else {
      parse_case_pack(read_file(path));
      n = 1;
    }
    std::cout << "valid " << n << "\n";
    return ok;
  } catch (const Error& e) {
    return fail("validate", e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel-driver co-evolution mining, patch scoring and adaptation."};
  app.require_subcommand(1);

  MineArgs mine;
  auto* m = app.add_subcommand("mine", "Mine driver co-evolution case packs from a git repository");
  m->add_option("--repo", mine.repo, "Repository path")->required();
  m->add_option("--out", mine.out, "Corpus output directory")->required();
  m->add_option("--subtree", mine.options.subtree, "Driver subtree prefix")->capture_default_str();
  m->add_option("--since", mine.options.since, "First author day, YYYY-MM-DD")->capture_default_str();
  m->add_option("--until", mine.options.until, "Last author day, YYYY-MM-DD")->capture_default_str();
  m->add_option("--min-confidence", mine.options.min_confidence)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  m->add_option("--propagation-threshold", mine.options.propagation_threshold)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  ScoreArgs score;
  auto* s = app.add_subcommand("score", "Score a generated patch against a reference patch");
  s->add_option("baseline", score.baseline, "Baseline file or source tree")->required();
  s->add_option("reference", score.ref, "Reference patch")->required();
  s->add_option("generated", score.gen, "Generated patch")->required();
  s->add_option("--fuzz", score.fuzz, "Line offset tolerance")->capture_default_str();

  RunArgs run;
  auto* r = app.add_subcommand("run", "Run the adaptation loop over a corpus");
  r->add_option("--corpus", run.corpus, "Corpus directory")->required();
  r->add_option("--logs", run.logs, "Session log directory (default <corpus>/sessions)");
  r->add_option("--backend", run.backend, "mock | mock-fail | scripted:<file> | http")->capture_default_str();
  r->add_option("--endpoint", run.endpoint, "Chat-completions URL for the http backend");
  r->add_option("--model", run.model, "Model name for the http backend");
  r->add_option("--build", run.build, "cc | command | none")
      ->check(CLI::IsMember({"cc", "command", "none"}))
      ->capture_default_str();
  r->add_option("--compiler", run.compiler, "Compiler for --build cc")->capture_default_str();
  r->add_option("--include", run.include_dirs, "Extra include directory for --build cc");
  r->add_option("--kernel-repo", run.kernel_repo, "Repository whose include/ at K' is used for --build cc");
  r->add_option("--build-command", run.build_command, "Command template with {workspace} for --build command");
  r->add_option("--runner", run.runner, "none | mock | command")
      ->check(CLI::IsMember({"none", "mock", "command"}))
      ->capture_default_str();
  r->add_option("--runner-command", run.runner_command, "Command template with {check} and {case}");
  r->add_option("--config", run.config, "JSON loop configuration");
  r->add_option("--max-attempts", run.max_attempts)
      ->check(CLI::Range(std::size_t{1}, loop::kMaxAttemptsCeiling))
      ->capture_default_str();
  r->add_option("--threshold", run.threshold, "Static gate threshold")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  r->add_option("--fuzz", run.fuzz)->capture_default_str();
  r->add_option("--jobs", run.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  r->add_flag("--no-reference-gate", run.no_reference_gate, "Gate on syntax only");

  std::vector<std::string> log_paths;
  bool table = false;
  auto* rep = app.add_subcommand("report", "Aggregate session logs");
  rep->add_option("logs", log_paths, "Session log files or directories, one patch set each")->required();
  rep->add_flag("--table", table, "Print the text table instead of JSON");

  std::string validate_path;
  auto* v = app.add_subcommand("validate", "Check a case pack or a corpus directory");
  v->add_option("path", validate_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? ok : usage;
  }
  if (r->parsed()) {
    if (run.build == "command" && run.build_command.empty()) {
      std::cerr << "kdrift run: --build command needs --build-command\n";
      return usage;
    }
    if (run.runner == "command" && run.runner_command.empty()) {
      std::cerr << "kdrift run: --runner command needs --runner-command\n";
      return usage;
    }
    if (run.backend == "http" && run.endpoint.empty()) {
      std::cerr << "kdrift run: the http backend needs --endpoint\n";
      return usage;
    }
    return cmd_run(run, *r);
  }
  if (m->parsed()) return cmd_mine(mine);
  if (s->parsed()) return cmd_score(score);
  if (rep->parsed()) return cmd_report(log_paths, table);
  return cmd_validate(validate_path);
}

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kdrift/casepack.hpp"
#include "kdrift/localize.hpp"
#include "kdrift/udiff.hpp"

namespace kdrift::loop {

enum class Stage { stage1_patch_application, stage2_compilation, passed };
enum class Outcome { generated_only, static_rejected, compiled, runtime_validated, failed };

std::string_view to_string(Stage stage) noexcept;
std::string_view to_string(Outcome outcome) noexcept;
Stage stage_from_string(std::string_view name);
Outcome outcome_from_string(std::string_view name);

// ---- static gate -----------------------------------------------------------

inline constexpr double kDefaultGateThreshold = 0.7;

struct GateResult {
  bool syntax_ok = false;
  std::optional<double> similarity;
  bool accepted = false;
  std::vector<std::string> problems;

  friend bool operator==(const GateResult&, const GateResult&) = default;
};

/// accepted iff syntax_ok and (no similarity or similarity >= threshold).
/// The comparison allows 1e-12 of rounding so the boundary is inclusive.
GateResult gate_decision(bool syntax_ok, std::optional<double> similarity, double threshold);

struct GateLevels {
  double files = 1.0;  // Jaccard of touched path sets
  double hunks = 1.0;  // min/max of hunk counts
  double lines = 1.0;  // multiset Jaccard of changed lines, whitespace trimmed
  double mean() const { return (files + hunks + lines) / 3.0; }
};

GateLevels gate_levels(const udiff::UnifiedDiff& candidate, const udiff::UnifiedDiff& reference);

/// Syntax check plus, when a reference is given, the mean of the three
/// similarity levels. Never throws for bad candidates.
GateResult static_gate(std::string_view candidate, std::optional<std::string_view> reference,
                       double threshold = kDefaultGateThreshold);

// ---- build -----------------------------------------------------------------

struct Diagnostic {
  std::string severity;  // error, warning, note, fatal error
  std::string file;
  std::size_t line = 0;
  std::optional<std::size_t> column;
  std::string text;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct DiagnosticReport {
  int exit_code = 0;
  bool timed_out = false;
  std::vector<Diagnostic> messages;
  std::set<std::string> extracted_symbols;

  bool has_errors() const;
  friend bool operator==(const DiagnosticReport&, const DiagnosticReport&) = default;
};

/// file:line[:col]: severity: text lines, in emitted order.
DiagnosticReport parse_diagnostics(int exit_code, std::string_view output);

/// Names quoted in implicit-declaration, undeclared, unknown-type,
/// missing-member and undefined-reference messages.
std::set<std::string> extract_symbols(std::string_view text);

class BuildExecutor {
 public:
  virtual ~BuildExecutor() = default;
  /// Throws Error(executor_unavailable) or Error(timeout).
  virtual DiagnosticReport build(const std::filesystem::path& workspace) = 0;
};

/// Syntax-only compile of every .c file in the workspace with the host
/// compiler; implicit declarations are errors.
class LocalCompilerExecutor final : public BuildExecutor {
 public:
  struct Options {
    std::string compiler = "cc";
    std::vector<std::filesystem::path> include_dirs;
    std::vector<std::string> extra_flags;
    std::chrono::milliseconds timeout{60000};
  };
  LocalCompilerExecutor();
  explicit LocalCompilerExecutor(Options options);
  DiagnosticReport build(const std::filesystem::path& workspace) override;

 private:
  Options options_;
};

/// Runs a command template with {workspace} substituted, e.g. a container
/// invocation of an out-of-tree kernel module build:
///   docker run --rm -v {workspace}:/src kbuild make -C /kernel M=/src modules
class CommandExecutor final : public BuildExecutor {
 public:
  explicit CommandExecutor(std::string command_template, std::chrono::milliseconds timeout = std::chrono::minutes(30));
  DiagnosticReport build(const std::filesystem::path& workspace) override;

 private:
  std::string template_;
  std::chrono::milliseconds timeout_;
};

DiagnosticReport run_build(const std::filesystem::path& workspace, BuildExecutor& executor);

/// stage1 when apply_error is present, stage2 on error diagnostics or a
/// nonzero exit, else passed. Throws Error(invariant_violation) when both
/// inputs are absent.
Stage classify_failure(const std::optional<std::string>& apply_error, const std::optional<DiagnosticReport>& report);

/// First `max_errors` error messages plus the extracted symbols.
std::string summarize_diagnostics(const DiagnosticReport& report, std::size_t max_errors = 10);

// ---- generation ------------------------------------------------------------

struct GenerationRequest {
  const CasePack& pack;
  std::size_t attempt = 1;  // 1-based
  std::string prompt;
};

class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  /// Candidate unified diff. Any exception counts as a generator failure.
  virtual std::string generate(const GenerationRequest& request) = 0;
};

/// Echoes the case's reference patch.
class ReferenceGenerator final : public GenerationBackend {
 public:
  std::string generate(const GenerationRequest& request) override;
};

/// Always answers with prose instead of a diff.
class MalformedGenerator final : public GenerationBackend {
 public:
  std::string generate(const GenerationRequest& request) override;
};

/// Step i answers attempt i (the last step repeats). A step is a literal
/// diff, the case reference, a malformed reply, or a thrown failure.
class ScriptedGenerator final : public GenerationBackend {
 public:
  struct Step {
    enum class Kind { diff, reference, malformed, failure } kind = Kind::diff;
    std::string text;
  };
  explicit ScriptedGenerator(std::vector<Step> steps);
  /// JSON array of "reference" | "malformed" | "failure" | {"diff": text} |
  /// {"file": path relative to the script}. Throws Error(malformed_document).
  static ScriptedGenerator from_file(const std::filesystem::path& path);
  std::string generate(const GenerationRequest& request) override;
  std::size_t size() const { return steps_.size(); }

 private:
  std::vector<Step> steps_;
};

/// OpenAI-style chat-completions client. The API key is read from the named
/// environment variable at call time.
class HttpChatGenerator final : public GenerationBackend {
 public:
  struct Options {
    std::string endpoint;  // e.g. https://api.example.com/v1/chat/completions
    std::string model;
    std::string api_key_env = "KDRIFT_API_KEY";
    double temperature = 0.0;
    std::chrono::seconds timeout{120};
  };
  explicit HttpChatGenerator(Options options);
  std::string generate(const GenerationRequest& request) override;

 private:
  Options options_;
};

/// Strips a surrounding ``` fence (with optional language tag) from a reply.
std::string strip_code_fence(std::string_view reply);

// ---- runtime validation ----------------------------------------------------

struct CheckResult {
  std::string id;
  std::string kind;  // functional or security
  bool passed = false;
  bool timed_out = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

class RuntimeRunner {
 public:
  virtual ~RuntimeRunner() = default;
  /// Throws Error(runner_unavailable); a timeout should come back as a
  /// failed result with timed_out set.
  virtual CheckResult run_check(const std::string& check_id, const CasePack& pack) = 0;
};

class MockRunner final : public RuntimeRunner {
 public:
  explicit MockRunner(std::set<std::string> failing = {});
  CheckResult run_check(const std::string& check_id, const CasePack& pack) override;

 private:
  std::set<std::string> failing_;
};

/// Runs a command template with {check} and {case} substituted; exit 0 passes.
/// A boot-and-smoke-test template might be
///   qemu-smoke --kernel bzImage --module {case}.ko --check {check}
class CommandRunner final : public RuntimeRunner {
 public:
  explicit CommandRunner(std::string command_template, std::chrono::milliseconds timeout = std::chrono::minutes(5));
  CheckResult run_check(const std::string& check_id, const CasePack& pack) override;

 private:
  std::string template_;
  std::chrono::milliseconds timeout_;
};

// ---- session ---------------------------------------------------------------

struct AttemptRecord {
  std::size_t index = 1;
  std::string prompt_digest;
  std::string candidate_patch;
  GateResult gate;
  std::optional<DiagnosticReport> build;
  std::optional<Stage> stage;  // absent when the build stage is disabled
  std::optional<std::string> apply_error;
  std::optional<std::string> generator_error;

  friend bool operator==(const AttemptRecord&, const AttemptRecord&) = default;
};

struct AdaptationSession {
  CasePack pack;
  std::optional<std::string> kernel_pre_rev;
  std::string kernel_post_rev;
  std::string kernel_delta;
  std::vector<AttemptRecord> attempts;
  Outcome outcome = Outcome::failed;
  std::size_t max_attempts = 5;
  std::vector<CheckResult> checks;
  std::optional<std::string> aborted;  // reason the session stopped early
  udiff::SourceMap final_sources;      // baseline with the last applied candidate
};

inline constexpr std::size_t kDefaultMaxAttempts = 5;
inline constexpr std::size_t kMaxAttemptsCeiling = 10;

struct LoopConfig {
  std::size_t max_attempts = kDefaultMaxAttempts;
  double gate_threshold = kDefaultGateThreshold;
  bool gate_against_reference = true;  // benchmark mode
  std::size_t fuzz = udiff::kDefaultFuzz;
  std::size_t context_pad = localize::kDefaultPad;
  std::optional<std::filesystem::path> template_dir;
  std::optional<std::filesystem::path> workspace_root;
  ValidationPlan plan;

  /// Throws Error(invalid_range) when a field is out of bounds.
  void check() const;
};

/// JSON config: max_attempts, gate_threshold, gate_against_reference, fuzz,
/// context_pad, template_dir, workspace_root, functional_checks,
/// security_checks. Relative paths resolve against the file's directory.
LoopConfig load_config(const std::filesystem::path& path);

/// Template text for a label: template_dir/<fine>.txt, template_dir/<coarse>.txt,
/// then the built-ins. Throws Error(missing_template).
std::string select_template(const TaxonomyLabel& label, const std::optional<std::filesystem::path>& template_dir);

std::string assemble_prompt(const CasePack& pack, const std::vector<localize::ContextWindow>& windows,
                            std::string_view kernel_delta,
                            const std::optional<std::filesystem::path>& template_dir = std::nullopt);

/// Context windows around driver symbols named by the kernel delta; when the
/// delta names none, every driver function definition.
std::vector<localize::ContextWindow> localize_case(const CasePack& pack, std::string_view kernel_delta,
                                                   std::size_t pad);

struct KernelContext {
  std::optional<std::string> pre_rev;
  std::string post_rev;
  std::string delta;
};

/// generate -> gate -> apply -> build -> classify, at most max_attempts
/// times. `executor` may be null to stop after a successful apply.
AdaptationSession run_adaptation_loop(const CasePack& pack, const KernelContext& kernel, GenerationBackend& generator,
                                      BuildExecutor* executor, const LoopConfig& config);

/// Requires outcome compiled. Throws Error(invariant_violation) otherwise.
AdaptationSession runtime_validate(AdaptationSession session, RuntimeRunner& runner, const ValidationPlan& plan);

// ---- session log -----------------------------------------------------------

struct SessionSummary {
  std::string hash;
  CoarseLabel coarse = CoarseLabel::api_migration;
  std::optional<FineLabel> fine;
  Outcome outcome = Outcome::failed;
  std::size_t attempts = 0;
  std::size_t max_attempts = 0;
  bool generated = false;    // some attempt produced a candidate
  bool gate_passed = false;  // some attempt passed the static gate
  std::optional<std::string> aborted;
  std::vector<CheckResult> checks;
  std::optional<std::map<std::string, double>> score;

  friend bool operator==(const SessionSummary&, const SessionSummary&) = default;
};

SessionSummary summarize_session(const AdaptationSession& session);

/// One "attempt" line per attempt and a closing "session" line.
std::string session_to_jsonl(const AdaptationSession& session,
                             const std::optional<std::map<std::string, double>>& score = std::nullopt);

struct SessionLog {
  std::vector<AttemptRecord> attempts;
  SessionSummary summary;
};

/// Parses one or more concatenated session logs. Throws
/// Error(malformed_document) with the 1-based line number as subject.
std::vector<SessionLog> parse_session_logs(std::string_view jsonl);

}  // namespace kdrift::loop

#include <algorithm>

#include <json.hpp>

#include "kdrift/error.hpp"
#include "kdrift/looporch.hpp"
#include "kdrift/process.hpp"
#include "kdrift/text.hpp"

namespace kdrift::loop {

namespace {

std::string substitute(std::string s, std::string_view key, std::string_view value) {
  for (std::size_t pos = 0; (pos = s.find(key, pos)) != std::string::npos; pos += value.size())
    s.replace(pos, key.size(), value);
  return s;
}

}  // namespace

LocalCompilerExecutor::LocalCompilerExecutor() : LocalCompilerExecutor(Options{}) {}

LocalCompilerExecutor::LocalCompilerExecutor(Options options) : options_(std::move(options)) {}

DiagnosticReport LocalCompilerExecutor::build(const std::filesystem::path& workspace) {
  if (!program_exists(options_.compiler)) throw Error(Errc::executor_unavailable, options_.compiler, "compiler not found");
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(workspace))
    if (e.is_regular_file() && e.path().extension() == ".c")
      files.push_back(std::filesystem::relative(e.path(), workspace).generic_string());
  std::sort(files.begin(), files.end());
  if (files.empty()) return DiagnosticReport{};

  std::vector<std::string> argv = {options_.compiler, "-fsyntax-only", "-std=gnu11",
                                   "-Werror=implicit-function-declaration", "-fdiagnostics-color=never"};
  for (const auto& dir : options_.include_dirs) argv.push_back("-I" + std::filesystem::absolute(dir).string());
  argv.insert(argv.end(), options_.extra_flags.begin(), options_.extra_flags.end());
  argv.insert(argv.end(), files.begin(), files.end());

  ProcessOptions po;
  po.cwd = workspace;
  po.timeout = options_.timeout;
  po.extra_env = {"LC_ALL=C"};
  auto r = run_process(argv, po);
  if (r.timed_out) throw Error(Errc::timeout, options_.compiler, "build timed out");
  return parse_diagnostics(r.exit_code, r.out + r.err);
}

CommandExecutor::CommandExecutor(std::string command_template, std::chrono::milliseconds timeout)
    : template_(std::move(command_template)), timeout_(timeout) {}

DiagnosticReport CommandExecutor::build(const std::filesystem::path& workspace) {
  auto argv = split_command(template_);
  if (argv.empty()) throw Error(Errc::executor_unavailable, template_, "empty command");
  for (auto& a : argv) a = substitute(a, "{workspace}", workspace.string());
  ProcessOptions po;
  po.cwd = workspace;
  po.timeout = timeout_;
  po.extra_env = {"LC_ALL=C"};
  auto r = run_process(argv, po);
  if (r.timed_out) throw Error(Errc::timeout, argv.front(), "build timed out");
  return parse_diagnostics(r.exit_code, r.out + r.err);
}

std::string ReferenceGenerator::generate(const GenerationRequest& request) { return request.pack.patch; }

std::string MalformedGenerator::generate(const GenerationRequest&) {
  return "Here is how I would change the driver: replace the old call with the new one.\n";
}

ScriptedGenerator::ScriptedGenerator(std::vector<Step> steps) : steps_(std::move(steps)) {}

ScriptedGenerator ScriptedGenerator::from_file(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_document, path.string(), e.what());
  }
  if (!j.is_array()) throw Error(Errc::malformed_document, path.string(), "expected an array of steps");
  std::vector<Step> steps;
  for (const auto& s : j) {
    Step step;
    if (s.is_string()) {
      const auto k = s.get<std::string>();
      if (k == "reference") step.kind = Step::Kind::reference;
      else if (k == "malformed") step.kind = Step::Kind::malformed;
      else if (k == "failure") step.kind = Step::Kind::failure;
      else throw Error(Errc::malformed_document, path.string(), "unknown step " + k);
    } else if (s.is_object() && s.contains("diff") && s["diff"].is_string()) {
      step.text = s["diff"].get<std::string>();
    } else if (s.is_object() && s.contains("file") && s["file"].is_string()) {
      step.text = read_file(path.parent_path() / s["file"].get<std::string>());
    } else {
      throw Error(Errc::malformed_document, path.string(), "bad step " + s.dump());
    }
    steps.push_back(std::move(step));
  }
  if (steps.empty()) throw Error(Errc::malformed_document, path.string(), "no steps");
  return ScriptedGenerator(std::move(steps));
}

std::string ScriptedGenerator::generate(const GenerationRequest& request) {
  if (steps_.empty()) throw Error(Errc::generator_failure, "scripted", "no steps");
  const auto& step = steps_[std::min(std::max<std::size_t>(request.attempt, 1), steps_.size()) - 1];
  switch (step.kind) {
    case Step::Kind::diff: return step.text;
    case Step::Kind::reference: return request.pack.patch;
    case Step::Kind::malformed: return MalformedGenerator{}.generate(request);
    case Step::Kind::failure:
      throw Error(Errc::generator_failure, "scripted", "attempt " + std::to_string(request.attempt) + " failed");
  }
  return {};
}

std::string strip_code_fence(std::string_view reply) {
  auto lines = split_lines(reply);
  std::size_t open = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (starts_with(trim(lines[i]), "```")) {
      open = i;
      break;
    }
  std::string out;
  if (open == lines.size()) {
    out = std::string(trim(reply));
  } else {
    for (std::size_t i = open + 1; i < lines.size() && !starts_with(trim(lines[i]), "```"); ++i) {
      out += lines[i];
      out += '\n';
    }
  }
  if (!out.empty() && out.back() != '\n') out += '\n';
  return out;
}

MockRunner::MockRunner(std::set<std::string> failing) : failing_(std::move(failing)) {}

CheckResult MockRunner::run_check(const std::string& check_id, const CasePack& pack) {
  CheckResult r;
  r.id = check_id;
  r.passed = !failing_.contains(check_id);
  r.detail = (r.passed ? "mock pass for " : "mock failure for ") + pack.hash;
  return r;
}

CommandRunner::CommandRunner(std::string command_template, std::chrono::milliseconds timeout)
    : template_(std::move(command_template)), timeout_(timeout) {}

CheckResult CommandRunner::run_check(const std::string& check_id, const CasePack& pack) {
  auto argv = split_command(template_);
  if (argv.empty()) throw Error(Errc::runner_unavailable, template_, "empty command");
  for (auto& a : argv) a = substitute(substitute(a, "{check}", check_id), "{case}", pack.hash);
  ProcessOptions po;
  po.timeout = timeout_;
  ProcessResult r;
  try {
    r = run_process(argv, po);
  } catch (const Error& e) {
    if (e.code() == Errc::executor_unavailable) throw Error(Errc::runner_unavailable, argv.front(), e.what());
    throw;
  }
  CheckResult c;
  c.id = check_id;
  c.timed_out = r.timed_out;
  c.passed = !r.timed_out && r.exit_code == 0;
  c.detail = std::string(trim(r.out + r.err));
  if (c.detail.size() > 2000) c.detail.resize(2000);
  return c;
}

}  // namespace kdrift::loop

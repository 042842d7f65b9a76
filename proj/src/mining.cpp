#include "kdrift/mining.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "kdrift/error.hpp"
#include "kdrift/process.hpp"
#include "kdrift/text.hpp"
#include "kdrift/udiff.hpp"

namespace kdrift::mining {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool under(std::string_view path, std::string_view prefix) { return prefix.empty() || starts_with(path, prefix); }

std::vector<CommitMeta> parse_log(const std::string& out) {
  std::vector<CommitMeta> commits;
  std::size_t pos = 0;
  while (pos < out.size()) {
    auto end = out.find('\x1e', pos);
    if (end == std::string::npos) end = out.size();
    std::string_view rec(out.data() + pos, end - pos);
    pos = end + 1;
    while (!rec.empty() && (rec.front() == '\n')) rec.remove_prefix(1);
    if (rec.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t f = 0;
    for (int i = 0; i < 3; ++i) {
      auto sep = rec.find('\x1f', f);
      if (sep == std::string_view::npos) throw Error(Errc::repository_unavailable, {}, "unexpected git log output");
      fields.push_back(rec.substr(f, sep - f));
      f = sep + 1;
    }
    CommitMeta meta;
    meta.hash = std::string(fields[0]);
    std::string_view parents = fields[1];
    while (!parents.empty()) {
      auto sp = parents.find(' ');
      meta.parents.emplace_back(parents.substr(0, sp));
      if (sp == std::string_view::npos) break;
      parents.remove_prefix(sp + 1);
    }
    meta.author_time = std::stoll(std::string(fields[2]));
    meta.message = std::string(trim_right(rec.substr(f)));
    commits.push_back(std::move(meta));
  }
  return commits;
}

constexpr const char* kLogFormat = "--format=%H%x1f%P%x1f%at%x1f%B%x1e";

}  // namespace

GitRepository::GitRepository(std::filesystem::path dir) : dir_(std::move(dir)) {
  ProcessResult r;
  try {
    r = run_process({"git", "-C", dir_.string(), "rev-parse", "--git-dir"});
  } catch (const Error&) {
    throw Error(Errc::repository_unavailable, dir_.string(), "git is not installed");
  }
  if (r.exit_code != 0) throw Error(Errc::repository_unavailable, dir_.string(), std::string(trim(r.err)));
}

std::string GitRepository::git(const std::vector<std::string>& args) const {
  std::vector<std::string> argv{"git",          "-C", dir_.string(), "-c", "core.quotepath=off", "-c",
                                "diff.noprefix=false", "-c", "diff.mnemonicPrefix=false"};
  argv.insert(argv.end(), args.begin(), args.end());
  auto r = run_process(argv);
  if (r.exit_code != 0) throw Error(Errc::repository_unavailable, dir_.string(), std::string(trim(r.err)));
  return r.out;
}

std::vector<CommitMeta> GitRepository::log() const {
  auto head = run_process({"git", "-C", dir_.string(), "rev-parse", "--verify", "--quiet", "HEAD"});
  if (head.exit_code != 0) return {};
  return parse_log(git({"log", "--reverse", "--author-date-order", kLogFormat, "HEAD"}));
}

std::optional<CommitMeta> GitRepository::find(std::string_view rev) const {
  auto r = run_process(
      {"git", "-C", dir_.string(), "rev-parse", "--verify", "--quiet", std::string(rev) + "^{commit}"});
  if (r.exit_code != 0) return std::nullopt;
  auto commits = parse_log(git({"log", "-1", kLogFormat, std::string(trim(r.out))}));
  if (commits.empty()) return std::nullopt;
  return commits.front();
}

std::string GitRepository::diff(const std::string& hash, std::string_view prefix) const {
  std::vector<std::string> args{"diff-tree",   "-p",    "-r",         "--root",        "--no-commit-id",
                                "--no-color",  "--no-renames", "--no-ext-diff", "--diff-algorithm=myers",
                                "-U3",         hash};
  if (!prefix.empty()) {
    args.emplace_back("--");
    args.emplace_back(prefix);
  }
  return git(args);
}

std::optional<std::string> GitRepository::read_file(const std::string& rev, const std::string& path) const {
  auto r = run_process({"git", "-C", dir_.string(), "cat-file", "blob", rev + ":" + path});
  if (r.exit_code != 0) return std::nullopt;
  return r.out;
}

void MemoryRepository::add(Commit commit) { commits_.push_back(std::move(commit)); }

std::vector<CommitMeta> MemoryRepository::log() const {
  std::vector<CommitMeta> out;
  for (const auto& c : commits_) out.push_back(c.meta);
  return out;
}

std::optional<CommitMeta> MemoryRepository::find(std::string_view rev) const {
  for (const auto& c : commits_)
    if (c.meta.hash == rev) return c.meta;
  return std::nullopt;
}

std::string MemoryRepository::diff(const std::string& hash, std::string_view prefix) const {
  for (const auto& c : commits_) {
    if (c.meta.hash != hash) continue;
    if (prefix.empty() || c.diff.empty()) return c.diff;
    auto parsed = udiff::parse_diff(c.diff);
    udiff::UnifiedDiff kept;
    for (const auto& fd : parsed.file_diffs)
      if (under(fd.target_path(), prefix)) kept.file_diffs.push_back(fd);
    return kept.file_diffs.empty() ? std::string{} : udiff::render_diff(kept);
  }
  throw Error(Errc::unknown_commit, hash);
}

std::optional<std::string> MemoryRepository::read_file(const std::string& rev, const std::string& path) const {
  for (const auto& c : commits_) {
    if (c.meta.hash != rev) continue;
    auto it = c.tree.find(path);
    if (it == c.tree.end()) return std::nullopt;
    return it->second;
  }
  throw Error(Errc::unknown_commit, rev);
}

std::int64_t parse_day(std::string_view day) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  std::string s(day);
  if (s.size() != 10 || std::sscanf(s.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3)
    throw Error(Errc::invalid_range, s, "expected YYYY-MM-DD");
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) throw Error(Errc::invalid_range, s, "not a calendar date");
  return std::chrono::sys_seconds{std::chrono::sys_days{ymd}}.time_since_epoch().count();
}

std::vector<CommitRecord> enumerate_driver_commits(const Repository& repo, std::string_view subtree,
                                                   std::string_view since, std::string_view until) {
  const auto lo = parse_day(since);
  const auto hi = parse_day(until) + 86399;
  if (lo > hi) throw Error(Errc::invalid_range, std::string(since) + ".." + std::string(until), "since is after until");

  std::vector<CommitRecord> out;
  for (const auto& meta : repo.log()) {
    if (meta.parents.size() > 1) continue;
    if (meta.author_time < lo || meta.author_time > hi) continue;
    std::string diff = repo.diff(meta.hash, subtree);
    if (diff.empty()) continue;
    udiff::UnifiedDiff parsed;
    try {
      parsed = udiff::parse_diff(diff);
    } catch (const Error&) {
      continue;
    }
    auto paths = parsed.touched_paths();
    std::erase_if(paths, [&](const std::string& p) { return !under(p, subtree); });
    if (paths.empty()) continue;
    out.push_back(CommitRecord{meta.hash, meta.message, std::move(paths), std::move(diff), meta.author_time});
  }
  return out;
}

CandidateScore KeywordClassifier::score(const CommitRecord& record) const {
  static const std::pair<std::string_view, double> kVocabulary[] = {
      {"deprecat", 0.4}, {"renam", 0.4},   {"convert", 0.4},   {"migrat", 0.4},   {"regression", 0.4},
      {"remov", 0.3},    {"replac", 0.3},  {"switch to", 0.3}, {"api", 0.3},      {"interface", 0.2},
      {"fix", 0.2},      {"follow", 0.2},  {"kernel-hash:", 0.5},
  };
  CandidateScore s{record.hash, std::string(kCoEvolution), 0.0};
  const std::string msg = lower(record.message);
  if (starts_with(msg, "revert")) return s;
  double miss = 1.0;
  for (const auto& [term, weight] : kVocabulary)
    if (msg.find(term) != std::string::npos) miss *= 1.0 - weight;
  s.confidence = 1.0 - miss;
  return s;
}

std::vector<CandidateScore> filter_candidates(const std::vector<CommitRecord>& records,
                                              const CandidateClassifier& classifier, double min_confidence) {
  if (!(min_confidence >= 0.0 && min_confidence <= 1.0))
    throw Error(Errc::invalid_range, std::to_string(min_confidence), "min_confidence must lie in [0,1]");
  std::vector<CandidateScore> out;
  for (const auto& r : records) {
    CandidateScore s;
    try {
      s = classifier.score(r);
    } catch (const std::exception& e) {
      throw Error(Errc::classifier_failure, r.hash, e.what());
    }
    if (!std::isfinite(s.confidence) || s.confidence < 0.0 || s.confidence > 1.0)
      throw Error(Errc::classifier_failure, r.hash, "confidence outside [0,1]");
    if (s.category == kCoEvolution && s.confidence >= min_confidence) out.push_back(std::move(s));
  }
  return out;
}

std::string normalized_diff_hash(std::string_view diff) {
  std::vector<std::string> files;
  try {
    auto parsed = udiff::parse_diff(diff);
    for (const auto& fd : parsed.file_diffs) {
      std::string block = udiff::strip_prefix(fd.old_path) + " -> " + udiff::strip_prefix(fd.new_path) + "\n";
      for (const auto& h : fd.hunks) {
        block += "@@\n";
        for (const auto& l : h.lines) {
          block += l.tag == udiff::LineTag::add ? '+' : l.tag == udiff::LineTag::del ? '-' : ' ';
          block += trim(l.text);
          block += '\n';
        }
      }
      files.push_back(std::move(block));
    }
  } catch (const Error&) {
    files.clear();
    std::string block;
    for (auto line : split_lines(diff)) {
      block += trim(line);
      block += '\n';
    }
    files.push_back(std::move(block));
  }
  std::sort(files.begin(), files.end());
  std::string joined;
  for (const auto& f : files) joined += f;
  return sha256_hex(joined);
}

std::vector<CommitRecord> dedupe(const std::vector<CommitRecord>& records) {
  std::set<std::string> seen;
  std::vector<CommitRecord> out;
  for (const auto& r : records)
    if (seen.insert(normalized_diff_hash(r.diff)).second) out.push_back(r);
  return out;
}

std::optional<std::string> trailer(std::string_view message, std::string_view key) {
  const std::string want = lower(key);
  for (auto line : split_lines(message)) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    if (lower(trim(line.substr(0, colon))) == want) return std::string(trim(line.substr(colon + 1)));
  }
  return std::nullopt;
}

LinkageRecord build_linkage(const Repository& repo, const std::string& driver_commit, const std::string& kernel_commit,
                            std::string_view subtree) {
  auto driver = repo.find(driver_commit);
  if (!driver) throw Error(Errc::unknown_commit, driver_commit);
  auto kernel = repo.find(kernel_commit);
  if (!kernel) throw Error(Errc::unknown_commit, kernel_commit);
  if (driver->parents.empty()) throw Error(Errc::orphan_commit, driver->hash);
  if (driver->hash == kernel->hash)
    throw Error(Errc::invariant_violation, driver->hash, "driver and kernel commit are the same");

  LinkageRecord link;
  link.driver_commit = driver->hash;
  link.kernel_commit = kernel->hash;
  if (!kernel->parents.empty()) link.kernel_parent = kernel->parents.front();
  link.driver_message = driver->message;
  link.driver_patch = repo.diff(driver->hash, subtree);
  link.kernel_patch = repo.diff(kernel->hash, {});
  if (link.driver_patch.empty()) return link;

  const std::string& parent = driver->parents.front();
  for (const auto& path : udiff::parse_diff(link.driver_patch).touched_paths()) {
    link.pre_driver_sources[path] = repo.read_file(parent, path);
    link.post_driver_sources[path] = repo.read_file(driver->hash, path);
  }
  return link;
}

std::map<std::string, TaxonomyLabel> label_linkages(const std::vector<LinkageRecord>& linkages,
                                                    const embed::EmbeddingProvider& provider, double threshold,
                                                    int rounds) {
  std::map<std::string, TaxonomyLabel> labels;
  std::map<std::string, std::pair<embed::EmbeddingVector, int>> sums;
  std::vector<embed::CommitRepresentation> unlabeled;

  auto joined = [](const std::map<std::string, std::optional<std::string>>& m) {
    std::string out;
    for (const auto& [_, text] : m)
      if (text) out += *text;
    return out;
  };

  for (const auto& link : linkages) {
    auto rep = embed::make_representation(link.driver_commit, provider.embed_text(link.driver_message),
                                          provider.embed_code(joined(link.pre_driver_sources)),
                                          provider.embed_code(joined(link.post_driver_sources)));
    if (auto fine = trailer(link.driver_message, "taxonomy")) {
      auto label = TaxonomyLabel::human(fine_from_string(*fine));
      auto& slot = sums[std::string(to_string(label.coarse))];
      if (slot.second == 0) slot.first = embed::EmbeddingVector::Zero(rep.fused.size());
      slot.first += rep.fused;
      ++slot.second;
      labels[link.driver_commit] = label;
    } else {
      unlabeled.push_back(std::move(rep));
    }
  }
  if (unlabeled.empty() || sums.empty()) return labels;

  std::vector<embed::Anchor> anchors;
  for (const auto& [id, sum] : sums) anchors.push_back(embed::Anchor{id, sum.first / sum.second, sum.second});
  auto result = embed::propagate_labels(unlabeled, anchors, threshold, rounds);
  for (const auto& a : result.assignments) {
    if (!a.label) continue;
    TaxonomyLabel label;
    label.coarse = coarse_from_string(*a.label);
    label.confidence = a.confidence;
    label.origin = LabelOrigin::propagated;
    labels[a.commit_id] = label;
  }
  return labels;
}

std::string kernel_sidecar_name(const std::string& hash) { return hash + ".kernel.json"; }

std::string serialize_kernel_link(const KernelLink& link) {
  nlohmann::json j;
  j["kernel-pre"] = link.pre_rev ? nlohmann::json(*link.pre_rev) : nlohmann::json(nullptr);
  j["kernel-post"] = link.post_rev;
  j["delta"] = link.delta;
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

KernelLink parse_kernel_link(std::string_view raw) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(raw.begin(), raw.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_document, "kernel link", e.what());
  }
  KernelLink link;
  try {
    if (!j.at("kernel-pre").is_null()) link.pre_rev = j["kernel-pre"].get<std::string>();
    link.post_rev = j.at("kernel-post").get<std::string>();
    link.delta = j.at("delta").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_violation, "kernel link", e.what());
  }
  return link;
}

std::vector<CorpusEntry> export_case_packs(const std::vector<LinkageRecord>& linkages,
                                           const std::map<std::string, TaxonomyLabel>& labels,
                                           const std::filesystem::path& out_dir) {
  std::vector<std::pair<CasePack, KernelLink>> packs;
  for (const auto& link : linkages) {
    auto it = labels.find(link.driver_commit);
    if (it == labels.end()) throw Error(Errc::missing_label, link.driver_commit);
    CasePack pack;
    pack.message = link.driver_message;
    pack.patch = link.driver_patch;
    pack.hash = link.driver_commit;
    pack.kernel_hash = link.kernel_commit;
    pack.type_label = it->second;
    for (const auto& [path, text] : link.pre_driver_sources) {
      pack.files.push_back(path);
      pack.contents[path] = text.value_or(std::string{});
    }
    check_invariants(pack);
    packs.emplace_back(std::move(pack), KernelLink{link.kernel_parent, link.kernel_commit, link.kernel_patch});
  }

  std::vector<CorpusEntry> index;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::write_failure, out_dir.string(), ec.message());
  for (const auto& [pack, kernel] : packs) {
    const std::string coarse(to_string(pack.type_label.coarse));
    std::filesystem::create_directories(out_dir / coarse, ec);
    if (ec) throw Error(Errc::write_failure, (out_dir / coarse).string(), ec.message());
    write_file(out_dir / coarse / (pack.hash + ".json"), serialize_case_pack(pack));
    write_file(out_dir / coarse / kernel_sidecar_name(pack.hash), serialize_kernel_link(kernel));
    index.push_back(CorpusEntry{coarse + "/" + pack.hash + ".json", pack.hash, pack.type_label.coarse});
  }
  std::sort(index.begin(), index.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
  write_file(out_dir / kIndexFileName, serialize_index(index));
  return index;
}

MineSummary mine(const Repository& repo, const CandidateClassifier& classifier,
                 const embed::EmbeddingProvider& provider, const MineOptions& options,
                 const std::filesystem::path& out_dir) {
  MineSummary summary;
  auto records = enumerate_driver_commits(repo, options.subtree, options.since, options.until);
  summary.candidates = records.size();

  std::set<std::string> keep;
  for (const auto& s : filter_candidates(records, classifier, options.min_confidence)) keep.insert(s.commit);
  std::erase_if(records, [&](const CommitRecord& r) { return !keep.contains(r.hash); });
  summary.retained = records.size();

  records = dedupe(records);
  summary.deduped = records.size();

  std::vector<LinkageRecord> linkages;
  for (const auto& r : records) {
    auto kernel = trailer(r.message, "kernel-hash");
    if (!kernel || !is_hex40(*kernel)) {
      summary.skipped.push_back(r.hash + ": no kernel-hash trailer");
      continue;
    }
    try {
      linkages.push_back(build_linkage(repo, r.hash, *kernel, options.subtree));
    } catch (const Error& e) {
      if (e.code() != Errc::unknown_commit && e.code() != Errc::orphan_commit) throw;
      summary.skipped.push_back(r.hash + ": " + e.what());
    }
  }
  summary.linked = linkages.size();

  auto labels = label_linkages(linkages, provider, options.propagation_threshold);
  std::erase_if(linkages, [&](const LinkageRecord& l) {
    if (labels.contains(l.driver_commit)) return false;
    summary.skipped.push_back(l.driver_commit + ": unlabeled");
    return true;
  });
  summary.index = export_case_packs(linkages, labels, out_dir);
  summary.exported = summary.index.size();
  return summary;
}

}  // namespace kdrift::mining

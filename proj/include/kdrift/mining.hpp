#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdrift/casepack.hpp"
#include "kdrift/embedcluster.hpp"

namespace kdrift::mining {

struct CommitMeta {
  std::string hash;
  std::vector<std::string> parents;
  std::string message;
  std::int64_t author_time = 0;  // seconds since the epoch
};

/// Read access to a version-controlled tree.
class Repository {
 public:
  virtual ~Repository() = default;
  /// Every commit reachable from HEAD, oldest first, parents before children.
  virtual std::vector<CommitMeta> log() const = 0;
  virtual std::optional<CommitMeta> find(std::string_view rev) const = 0;
  /// Unified diff of `hash` against its first parent (the empty tree for a
  /// root), limited to paths under `prefix` when non-empty.
  virtual std::string diff(const std::string& hash, std::string_view prefix) const = 0;
  /// File body at a revision; nullopt when the path does not exist there.
  virtual std::optional<std::string> read_file(const std::string& rev, const std::string& path) const = 0;
};

/// Shells out to git. Throws Error(repository_unavailable) when `dir` is not
/// a readable repository.
class GitRepository final : public Repository {
 public:
  explicit GitRepository(std::filesystem::path dir);
  std::vector<CommitMeta> log() const override;
  std::optional<CommitMeta> find(std::string_view rev) const override;
  std::string diff(const std::string& hash, std::string_view prefix) const override;
  std::optional<std::string> read_file(const std::string& rev, const std::string& path) const override;

 private:
  std::string git(const std::vector<std::string>& args) const;
  std::filesystem::path dir_;
};

/// Fixture-backed repository for tests: commits, diffs and file snapshots are
/// supplied directly.
class MemoryRepository final : public Repository {
 public:
  struct Commit {
    CommitMeta meta;
    std::string diff;
    std::map<std::string, std::string> tree;
  };
  void add(Commit commit);
  std::vector<CommitMeta> log() const override;
  std::optional<CommitMeta> find(std::string_view rev) const override;
  std::string diff(const std::string& hash, std::string_view prefix) const override;
  std::optional<std::string> read_file(const std::string& rev, const std::string& path) const override;

 private:
  std::vector<Commit> commits_;
};

struct CommitRecord {
  std::string hash;
  std::string message;
  std::vector<std::string> paths;
  std::string diff;
  std::int64_t author_time = 0;
};

/// "YYYY-MM-DD" to the first second of that UTC day. Throws Error(invalid_range).
std::int64_t parse_day(std::string_view day);

/// Non-merge commits touching `subtree`, oldest first, with author dates in
/// [since, until] (whole UTC days). The diff and paths are limited to the
/// subtree. Throws Error(invalid_range) when since > until.
std::vector<CommitRecord> enumerate_driver_commits(const Repository& repo, std::string_view subtree,
                                                   std::string_view since, std::string_view until);

struct CandidateScore {
  std::string commit;
  std::string category;
  double confidence = 0.0;
};

class CandidateClassifier {
 public:
  virtual ~CandidateClassifier() = default;
  virtual CandidateScore score(const CommitRecord& record) const = 0;
};

inline constexpr std::string_view kCoEvolution = "co_evolution";

/// Noisy-or over API-change vocabulary found in the commit message. Reverts
/// score zero.
class KeywordClassifier final : public CandidateClassifier {
 public:
  CandidateScore score(const CommitRecord& record) const override;
};

/// Records whose co-evolution confidence is at least `min_confidence`.
/// Classifier exceptions and non-finite scores become
/// Error(classifier_failure) naming the commit.
std::vector<CandidateScore> filter_candidates(const std::vector<CommitRecord>& records,
                                              const CandidateClassifier& classifier, double min_confidence);

/// Hash of the diff with paths sorted, line numbers dropped and every line
/// trimmed.
std::string normalized_diff_hash(std::string_view diff);

/// Keeps the first record for every normalized diff hash.
std::vector<CommitRecord> dedupe(const std::vector<CommitRecord>& records);

/// Value of a "key: value" trailer line in a commit message, key matched
/// case-insensitively.
std::optional<std::string> trailer(std::string_view message, std::string_view key);

struct LinkageRecord {
  std::string driver_commit;
  std::string kernel_commit;
  std::optional<std::string> kernel_parent;
  std::string driver_message;
  std::string driver_patch;
  std::string kernel_patch;
  // nullopt marks a file that does not exist on that side
  std::map<std::string, std::optional<std::string>> pre_driver_sources;
  std::map<std::string, std::optional<std::string>> post_driver_sources;
};

/// Throws Error(unknown_commit) or Error(orphan_commit).
LinkageRecord build_linkage(const Repository& repo, const std::string& driver_commit, const std::string& kernel_commit,
                            std::string_view subtree = {});

/// Human labels from "taxonomy:" trailers; every other linkage gets the
/// coarse label of its nearest anchor when the propagation confidence clears
/// `threshold`. Anchors are the per-coarse-label centroids of the human set.
std::map<std::string, TaxonomyLabel> label_linkages(const std::vector<LinkageRecord>& linkages,
                                                    const embed::EmbeddingProvider& provider, double threshold,
                                                    int rounds = 5);

std::string kernel_sidecar_name(const std::string& hash);

/// Writes <out>/<coarse>/<hash>.json, a <hash>.kernel.json sidecar holding the
/// kernel revisions and delta, and the corpus index. Throws
/// Error(missing_label) or Error(write_failure).
std::vector<CorpusEntry> export_case_packs(const std::vector<LinkageRecord>& linkages,
                                           const std::map<std::string, TaxonomyLabel>& labels,
                                           const std::filesystem::path& out_dir);

struct KernelLink {
  std::optional<std::string> pre_rev;
  std::string post_rev;
  std::string delta;
};

std::string serialize_kernel_link(const KernelLink& link);
KernelLink parse_kernel_link(std::string_view raw);

struct MineOptions {
  std::string subtree = "drivers/";
  std::string since = "1970-01-01";
  std::string until = "9999-12-31";
  double min_confidence = 0.5;
  double propagation_threshold = 0.6;
};

struct MineSummary {
  std::size_t candidates = 0;
  std::size_t retained = 0;
  std::size_t deduped = 0;
  std::size_t linked = 0;
  std::size_t exported = 0;
  std::vector<std::string> skipped;  // "hash: reason"
  std::vector<CorpusEntry> index;
};

/// enumerate -> filter -> dedupe -> linkage -> label -> export. Retained
/// commits without a kernel-hash trailer, or left unlabeled, are skipped.
MineSummary mine(const Repository& repo, const CandidateClassifier& classifier,
                 const embed::EmbeddingProvider& provider, const MineOptions& options,
                 const std::filesystem::path& out_dir);

}  // namespace kdrift::mining

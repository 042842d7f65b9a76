#include "kdrift/error.hpp"

namespace kdrift {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_document: return "MalformedDocument";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::empty_input: return "EmptyInput";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::truncated_hunk: return "TruncatedHunk";
    case Errc::patch_apply_failure: return "PatchApplyFailure";
    case Errc::missing_baseline_file: return "MissingBaselineFile";
    case Errc::reconstruction_failure: return "ReconstructionFailure";
    case Errc::parser_unavailable: return "ParserUnavailable";
    case Errc::undefined_similarity: return "UndefinedSimilarity";
    case Errc::out_of_range_metric: return "OutOfRangeMetric";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::empty_anchor_set: return "EmptyAnchorSet";
    case Errc::repository_unavailable: return "RepositoryUnavailable";
    case Errc::invalid_range: return "InvalidRange";
    case Errc::classifier_failure: return "ClassifierFailure";
    case Errc::unknown_commit: return "UnknownCommit";
    case Errc::orphan_commit: return "OrphanCommit";
    case Errc::write_failure: return "WriteFailure";
    case Errc::missing_label: return "MissingLabel";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::missing_template: return "MissingTemplate";
    case Errc::executor_unavailable: return "ExecutorUnavailable";
    case Errc::timeout: return "Timeout";
    case Errc::generator_failure: return "GeneratorFailure";
    case Errc::runner_unavailable: return "RunnerUnavailable";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::degenerate_variance: return "DegenerateVariance";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& subject, const std::string& message) {
  std::string out(to_string(code));
  if (!subject.empty()) out += "(" + subject + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(Errc code, std::string subject, const std::string& message)
    : std::runtime_error(compose(code, subject, message)), code_(code), subject_(std::move(subject)) {}

}  // namespace kdrift

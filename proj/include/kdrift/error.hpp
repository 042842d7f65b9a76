#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdrift {

enum class Errc {
  malformed_document,
  schema_violation,
  invariant_violation,
  unknown_label,
  empty_input,
  malformed_header,
  truncated_hunk,
  patch_apply_failure,
  missing_baseline_file,
  reconstruction_failure,
  parser_unavailable,
  undefined_similarity,
  out_of_range_metric,
  dimension_mismatch,
  empty_anchor_set,
  repository_unavailable,
  invalid_range,
  classifier_failure,
  unknown_commit,
  orphan_commit,
  write_failure,
  missing_label,
  unknown_symbol,
  missing_template,
  executor_unavailable,
  timeout,
  generator_failure,
  runner_unavailable,
  insufficient_data,
  degenerate_variance,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `subject` carries the offending
/// field, hash, path or hunk index so callers can report it without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string subject, const std::string& message = {});

  Errc code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  Errc code_;
  std::string subject_;
};

}  // namespace kdrift

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdrift/error.hpp"

namespace kdrift::embed {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using EmbeddingVector = Vector<double>;

/// normalize(post - pre); the zero vector when post == pre.
template <typename DerivedPre, typename DerivedPost>
Vector<typename DerivedPre::Scalar> embedding_delta(const Eigen::MatrixBase<DerivedPre>& pre,
                                                    const Eigen::MatrixBase<DerivedPost>& post) {
  using Scalar = typename DerivedPre::Scalar;
  if (pre.size() != post.size())
    throw Error(Errc::dimension_mismatch, std::to_string(pre.size()) + " vs " + std::to_string(post.size()));
  Vector<Scalar> d = post - pre;
  const Scalar n = d.norm();
  if (n == Scalar(0)) return Vector<Scalar>::Zero(d.size());
  return d / n;
}

/// Concatenation, text block first.
template <typename DerivedText, typename DerivedDelta>
Vector<typename DerivedText::Scalar> fuse(const Eigen::MatrixBase<DerivedText>& text,
                                          const Eigen::MatrixBase<DerivedDelta>& delta) {
  Vector<typename DerivedText::Scalar> out(text.size() + delta.size());
  out << text, delta;
  return out;
}

/// Cosine similarity; 0 when either vector is zero.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Scalar na = a.norm();
  const Scalar nb = b.norm();
  if (na == Scalar(0) || nb == Scalar(0)) return Scalar(0);
  return std::clamp(a.dot(b) / (na * nb), Scalar(-1), Scalar(1));
}

struct CommitRepresentation {
  std::string commit_id;
  EmbeddingVector text_vec;
  EmbeddingVector delta_vec;  // unit or zero
  EmbeddingVector fused;
};

CommitRepresentation make_representation(std::string commit_id, const EmbeddingVector& text_vec,
                                         const EmbeddingVector& pre_code, const EmbeddingVector& post_code);

struct Anchor {
  std::string id;
  EmbeddingVector centroid;
  int member_count = 1;
};

struct Assignment {
  std::string commit_id;
  std::optional<std::string> label;
  double confidence = 0.0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Nearest anchor by cosine, ties to the lexicographically smallest id;
/// confidence (1 + cos) / 2, label kept iff confidence >= threshold.
/// Throws Error(empty_anchor_set) or Error(dimension_mismatch).
Assignment assign_to_anchor(const CommitRepresentation& rep, const std::vector<Anchor>& anchors, double threshold);

struct Propagation {
  std::vector<Assignment> assignments;  // same order as the input reps
  std::vector<Anchor> anchors;
  int rounds = 0;
  bool converged = false;
};

/// Each round assigns the still-unlabeled reps, then recomputes every
/// centroid as the mean of its seeds plus all reps labeled so far. Stops
/// once a round labels nothing new or after `rounds` rounds.
Propagation propagate_labels(const std::vector<CommitRepresentation>& reps, const std::vector<Anchor>& anchors,
                             double threshold, int rounds);

/// Source of embeddings for commit messages and code regions.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual Eigen::Index dim() const = 0;
  virtual EmbeddingVector embed_text(std::string_view text) const = 0;
  virtual EmbeddingVector embed_code(std::string_view code) const = 0;
};

/// Signed feature hashing of identifier and number tokens. Text embeddings
/// are lower-cased and unit-normalised; code embeddings keep raw counts so
/// deltas reflect how much changed.
class HashedBagOfTokens final : public EmbeddingProvider {
 public:
  explicit HashedBagOfTokens(Eigen::Index dim = 256);
  Eigen::Index dim() const override { return dim_; }
  EmbeddingVector embed_text(std::string_view text) const override;
  EmbeddingVector embed_code(std::string_view code) const override;

 private:
  EmbeddingVector accumulate(std::string_view text, bool lower) const;
  Eigen::Index dim_;
};

std::string anchors_to_json(const std::vector<Anchor>& anchors);
std::vector<Anchor> anchors_from_json(std::string_view raw);
std::string assignments_to_json(const std::vector<Assignment>& assignments);
std::vector<Assignment> assignments_from_json(std::string_view raw);

}  // namespace kdrift::embed

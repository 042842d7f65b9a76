#include "kdrift/embedcluster.hpp"

#include <cctype>
#include <map>

#include <json.hpp>

#include "kdrift/text.hpp"

namespace kdrift::embed {

CommitRepresentation make_representation(std::string commit_id, const EmbeddingVector& text_vec,
                                         const EmbeddingVector& pre_code, const EmbeddingVector& post_code) {
  CommitRepresentation rep;
  rep.commit_id = std::move(commit_id);
  rep.text_vec = text_vec;
  rep.delta_vec = embedding_delta(pre_code, post_code);
  rep.fused = fuse(rep.text_vec, rep.delta_vec);
  if (!rep.fused.allFinite()) throw Error(Errc::invariant_violation, rep.commit_id, "non-finite embedding");
  return rep;
}

Assignment assign_to_anchor(const CommitRepresentation& rep, const std::vector<Anchor>& anchors, double threshold) {
  if (anchors.empty()) throw Error(Errc::empty_anchor_set, rep.commit_id);
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw Error(Errc::invalid_range, "threshold");
  const Anchor* best = nullptr;
  double best_cos = -2.0;
  for (const auto& a : anchors) {
    if (a.centroid.size() != rep.fused.size())
      throw Error(Errc::dimension_mismatch, a.id,
                  std::to_string(a.centroid.size()) + " vs " + std::to_string(rep.fused.size()));
    const double c = cosine(rep.fused, a.centroid);
    if (!best || c > best_cos + 1e-12 || (std::abs(c - best_cos) <= 1e-12 && a.id < best->id)) {
      if (!best || c > best_cos + 1e-12) best_cos = c;
      best = &a;
    }
  }
  Assignment out;
  out.commit_id = rep.commit_id;
  out.confidence = std::clamp((1.0 + best_cos) / 2.0, 0.0, 1.0);
  if (out.confidence >= threshold) out.label = best->id;
  return out;
}

Propagation propagate_labels(const std::vector<CommitRepresentation>& reps, const std::vector<Anchor>& anchors,
                             double threshold, int rounds) {
  if (anchors.empty()) throw Error(Errc::empty_anchor_set, {});
  if (rounds < 1) throw Error(Errc::invalid_range, "rounds", "must be at least 1");

  const std::vector<Anchor> seeds = anchors;
  Propagation state;
  state.anchors = anchors;
  state.assignments.resize(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) state.assignments[i].commit_id = reps[i].commit_id;

  for (int r = 1; r <= rounds; ++r) {
    state.rounds = r;
    bool changed = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (state.assignments[i].label) continue;
      auto a = assign_to_anchor(reps[i], state.anchors, threshold);
      changed = changed || a.label.has_value();
      state.assignments[i] = std::move(a);
    }
    if (!changed) {
      state.converged = true;
      break;
    }

    std::map<std::string, std::pair<EmbeddingVector, int>> members;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (!state.assignments[i].label) continue;
      auto& slot = members[*state.assignments[i].label];
      if (slot.second == 0) slot.first = EmbeddingVector::Zero(reps[i].fused.size());
      slot.first += reps[i].fused;
      ++slot.second;
    }
    for (std::size_t a = 0; a < seeds.size(); ++a) {
      auto it = members.find(seeds[a].id);
      if (it == members.end()) continue;
      const double total = seeds[a].member_count + it->second.second;
      state.anchors[a].centroid = (seeds[a].centroid * seeds[a].member_count + it->second.first) / total;
      state.anchors[a].member_count = seeds[a].member_count + it->second.second;
    }
    if (std::all_of(state.assignments.begin(), state.assignments.end(),
                    [](const Assignment& a) { return a.label.has_value(); })) {
      state.converged = true;
      break;
    }
  }
  return state;
}

HashedBagOfTokens::HashedBagOfTokens(Eigen::Index dim) : dim_(dim) {
  if (dim < 1) throw Error(Errc::dimension_mismatch, std::to_string(dim), "dimension must be positive");
}

EmbeddingVector HashedBagOfTokens::accumulate(std::string_view text, bool lower) const {
  EmbeddingVector v = EmbeddingVector::Zero(dim_);
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (!(std::isalnum(c) || c == '_')) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::string token;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
      token += lower ? static_cast<char>(std::tolower(static_cast<unsigned char>(text[j]))) : text[j];
      ++j;
    }
    const auto h = fnv1a64(token);
    const auto slot = static_cast<Eigen::Index>(h % static_cast<std::uint64_t>(dim_));
    v[slot] += (h >> 63) ? -1.0 : 1.0;
    i = j;
  }
  return v;
}

EmbeddingVector HashedBagOfTokens::embed_text(std::string_view text) const {
  EmbeddingVector v = accumulate(text, true);
  const double n = v.norm();
  return n == 0.0 ? v : EmbeddingVector(v / n);
}

EmbeddingVector HashedBagOfTokens::embed_code(std::string_view code) const { return accumulate(code, false); }

namespace {

nlohmann::json vec_to_json(const EmbeddingVector& v) {
  return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

EmbeddingVector vec_from_json(const nlohmann::json& j) {
  auto values = j.get<std::vector<double>>();
  return Eigen::Map<const EmbeddingVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

nlohmann::json parse_json(std::string_view raw) {
  try {
    return nlohmann::json::parse(raw.begin(), raw.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_document, {}, e.what());
  }
}

}  // namespace

std::string anchors_to_json(const std::vector<Anchor>& anchors) {
  auto arr = nlohmann::json::array();
  for (const auto& a : anchors)
    arr.push_back({{"id", a.id}, {"centroid", vec_to_json(a.centroid)}, {"member_count", a.member_count}});
  return arr.dump(2) + "\n";
}

std::vector<Anchor> anchors_from_json(std::string_view raw) {
  std::vector<Anchor> out;
  try {
    for (const auto& j : parse_json(raw))
      out.push_back(Anchor{j.at("id").get<std::string>(), vec_from_json(j.at("centroid")),
                           j.at("member_count").get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_violation, "anchor", e.what());
  }
  return out;
}

std::string assignments_to_json(const std::vector<Assignment>& assignments) {
  auto arr = nlohmann::json::array();
  for (const auto& a : assignments) {
    nlohmann::json j = {{"commit_id", a.commit_id}, {"confidence", a.confidence}};
    j["label"] = a.label ? nlohmann::json(*a.label) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<Assignment> assignments_from_json(std::string_view raw) {
  std::vector<Assignment> out;
  try {
    for (const auto& j : parse_json(raw)) {
      Assignment a;
      a.commit_id = j.at("commit_id").get<std::string>();
      a.confidence = j.at("confidence").get<double>();
      if (j.contains("label") && !j["label"].is_null()) a.label = j["label"].get<std::string>();
      out.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::schema_violation, "assignment", e.what());
  }
  return out;
}

}  // namespace kdrift::embed

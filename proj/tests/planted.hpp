#pragma once

#include <random>
#include <string>
#include <vector>

#include "kdrift/embedcluster.hpp"

namespace kdrift::testing {

struct Planted {
  std::vector<embed::CommitRepresentation> reps;
  std::vector<std::string> truth;
  std::vector<embed::Anchor> anchors;
};

// Two Gaussian clusters in text space and in code-delta direction; a few
// reps per cluster are held out as human seeds.
inline Planted plant_two_clusters(std::uint32_t seed, int per_cluster, int seeds_per_cluster) {
  constexpr int kDim = 8;
  std::mt19937 rng(seed);
  std::normal_distribution<double> noise(0.0, 0.25);
  Planted out;
  const char* names[2] = {"api_migration", "regression"};
  for (int c = 0; c < 2; ++c) {
    embed::EmbeddingVector text_mu = embed::EmbeddingVector::Zero(kDim);
    embed::EmbeddingVector code_mu = embed::EmbeddingVector::Zero(kDim);
    text_mu[c] = 1.0;
    code_mu[c + 2] = 3.0;
    embed::EmbeddingVector seed_sum = embed::EmbeddingVector::Zero(2 * kDim);
    for (int i = 0; i < per_cluster + seeds_per_cluster; ++i) {
      embed::EmbeddingVector text = text_mu;
      embed::EmbeddingVector pre(kDim), post(kDim);
      for (int k = 0; k < kDim; ++k) {
        text[k] += noise(rng);
        pre[k] = noise(rng) * 4.0;
        post[k] = pre[k] + code_mu[k] + noise(rng);
      }
      auto r = embed::make_representation(std::string(names[c]) + "-" + std::to_string(i), text, pre, post);
      if (i < seeds_per_cluster) {
        seed_sum += r.fused;
      } else {
        out.reps.push_back(std::move(r));
        out.truth.push_back(names[c]);
      }
    }
    out.anchors.push_back(embed::Anchor{names[c], seed_sum / seeds_per_cluster, seeds_per_cluster});
  }
  return out;
}

}  // namespace kdrift::testing

#include <doctest.h>

#include <random>

#include "kdrift/embedcluster.hpp"
#include "planted.hpp"

using namespace kdrift;
using namespace kdrift::embed;
using kdrift::testing::plant_two_clusters;

namespace {

EmbeddingVector vec(std::initializer_list<double> v) {
  EmbeddingVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

CommitRepresentation rep_with_fused(std::string id, EmbeddingVector fused) {
  CommitRepresentation r;
  r.commit_id = std::move(id);
  r.fused = std::move(fused);
  return r;
}

}  // namespace

TEST_CASE("embedding_delta") {
  CHECK(embedding_delta(vec({1, 2, 3}), vec({1, 2, 3})) == EmbeddingVector::Zero(3));
  auto d = embedding_delta(vec({0, 0}), vec({3, 4}));
  CHECK(d[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(d[1] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(embedding_delta(EmbeddingVector::Zero(4), EmbeddingVector::Zero(8)), Error);
  try {
    embedding_delta(EmbeddingVector::Zero(4), EmbeddingVector::Zero(8));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::dimension_mismatch);
  }
}

TEST_CASE("embedding_delta norm is zero or one") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::bernoulli_distribution same(0.2);
  for (int t = 0; t < 500; ++t) {
    EmbeddingVector pre(16), post(16);
    for (int k = 0; k < 16; ++k) pre[k] = u(rng);
    post = same(rng) ? pre : EmbeddingVector(pre + EmbeddingVector::NullaryExpr(16, [&] { return u(rng) * 1e-6; }));
    const double n = embedding_delta(pre, post).norm();
    CHECK((n == 0.0 || std::abs(n - 1.0) <= 1e-12));
  }
}

TEST_CASE("fuse") {
  CHECK(fuse(vec({1, 2}), vec({3, 4})) == vec({1, 2, 3, 4}));
  CHECK(fuse(vec({5, 6, 7}), EmbeddingVector::Zero(2)) == vec({5, 6, 7, 0, 0}));
  auto text = vec({0.5, -1, 2});
  auto delta = vec({0.6, 0.8});
  auto f = fuse(text, delta);
  CHECK(f.head(3) == text);
  CHECK(f.tail(2) == delta);
  auto rep = make_representation("c", text, vec({0, 0}), vec({3, 4}));
  CHECK(rep.fused.size() == rep.text_vec.size() + rep.delta_vec.size());
}

TEST_CASE("assign_to_anchor") {
  std::vector<Anchor> anchors{{"b", vec({0, 1}), 1}, {"a", vec({1, 0}), 1}};
  auto at = assign_to_anchor(rep_with_fused("x", vec({0, 2})), anchors, 0.6);
  CHECK(at.label == "b");
  CHECK(at.confidence == doctest::Approx(1.0));

  auto tie = assign_to_anchor(rep_with_fused("y", vec({1, 1})), anchors, 0.6);
  CHECK(tie.label == "a");

  // cos = 0.1 -> confidence 0.55
  const double c = 0.1;
  auto low = assign_to_anchor(rep_with_fused("z", vec({c, std::sqrt(1 - c * c)})), {{"a", vec({1, 0}), 1}}, 0.6);
  CHECK_FALSE(low.label.has_value());
  CHECK(low.confidence == doctest::Approx(0.55));

  CHECK_THROWS_AS(assign_to_anchor(rep_with_fused("e", vec({1})), {}, 0.5), Error);
  try {
    assign_to_anchor(rep_with_fused("e", vec({1})), {}, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_anchor_set);
  }
  CHECK_THROWS_AS(assign_to_anchor(rep_with_fused("d", vec({1, 0, 0})), anchors, 0.5), Error);
}

TEST_CASE("assign_to_anchor is scale invariant and threshold monotone") {
  std::mt19937 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  std::uniform_real_distribution<double> thr(0.0, 1.0);
  std::vector<Anchor> anchors;
  for (const char* id : {"a", "b", "c", "d"}) anchors.push_back({id, EmbeddingVector::NullaryExpr(6, [&] { return n(rng); }), 1});
  for (int t = 0; t < 300; ++t) {
    auto r = rep_with_fused("r", EmbeddingVector::NullaryExpr(6, [&] { return n(rng); }));
    auto base = assign_to_anchor(r, anchors, 0.0);
    auto scaled = rep_with_fused("r", r.fused * scale(rng));
    auto s = assign_to_anchor(scaled, anchors, 0.0);
    CHECK(s.label == base.label);
    CHECK(s.confidence == doctest::Approx(base.confidence).epsilon(1e-12));
    CHECK(base.confidence >= 0.0);
    CHECK(base.confidence <= 1.0);

    double t1 = thr(rng), t2 = thr(rng);
    if (t1 > t2) std::swap(t1, t2);
    auto lo = assign_to_anchor(r, anchors, t1);
    auto hi = assign_to_anchor(r, anchors, t2);
    if (hi.label) CHECK(lo.label.has_value());
    CHECK(lo.label.has_value() == (lo.confidence >= t1));
  }
}

TEST_CASE("propagate_labels fixed point") {
  std::vector<Anchor> anchors{{"a", vec({1, 0, 0}), 2}, {"b", vec({0, 0, 1}), 2}};
  std::vector<CommitRepresentation> reps{rep_with_fused("1", vec({1, 0, 0})), rep_with_fused("2", vec({0, 0, 1})),
                                         rep_with_fused("3", vec({1, 0, 0}))};
  auto p = propagate_labels(reps, anchors, 0.9, 5);
  CHECK(p.rounds == 1);
  CHECK(p.converged);
  REQUIRE(p.assignments.size() == 3);
  CHECK(p.assignments[0].label == "a");
  CHECK(p.assignments[1].label == "b");
  CHECK(p.assignments[2].label == "a");
  CHECK(p.anchors[0].member_count == 4);
  CHECK(p.anchors[0].centroid.isApprox(vec({1, 0, 0})));
  CHECK_THROWS_AS(propagate_labels(reps, {}, 0.5, 1), Error);
  CHECK_THROWS_AS(propagate_labels(reps, anchors, 0.5, 0), Error);
}

TEST_CASE("propagate_labels recovers planted clusters") {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    auto planted = plant_two_clusters(seed, 200, 3);
    auto p = propagate_labels(planted.reps, planted.anchors, 0.6, 10);
    std::size_t hit = 0;
    for (std::size_t i = 0; i < planted.reps.size(); ++i) {
      CHECK(p.assignments[i].commit_id == planted.reps[i].commit_id);
      if (p.assignments[i].label == planted.truth[i]) ++hit;
    }
    const double recovered = static_cast<double>(hit) / static_cast<double>(planted.reps.size());
    INFO("seed " << seed << " recovered " << recovered);
    CHECK(recovered >= 0.95);

    auto again = propagate_labels(planted.reps, planted.anchors, 0.6, 10);
    CHECK(again.assignments == p.assignments);
    CHECK(again.rounds == p.rounds);
  }
}

TEST_CASE("propagate_labels with unreachable threshold") {
  auto planted = plant_two_clusters(9, 50, 2);
  auto p = propagate_labels(planted.reps, planted.anchors, 1.0, 4);
  for (const auto& a : p.assignments) CHECK_FALSE(a.label.has_value());
  for (std::size_t i = 0; i < p.anchors.size(); ++i) {
    CHECK(p.anchors[i].centroid == planted.anchors[i].centroid);
    CHECK(p.anchors[i].member_count == planted.anchors[i].member_count);
  }
  CHECK(p.rounds == 1);
}

TEST_CASE("hashed bag of tokens") {
  HashedBagOfTokens h(64);
  auto t1 = h.embed_text("Convert IDA to ida_alloc");
  auto t2 = h.embed_text("convert ida TO ida_alloc");
  CHECK(t1 == t2);
  CHECK(t1.norm() == doctest::Approx(1.0));
  CHECK(h.embed_text("").norm() == 0.0);
  auto pre = h.embed_code("x = ida_simple_get(&ida, 0, 0, GFP_KERNEL);");
  auto post = h.embed_code("x = ida_alloc(&ida, GFP_KERNEL);");
  CHECK(pre.size() == 64);
  CHECK(pre.lpNorm<1>() > post.lpNorm<1>());
  CHECK(embedding_delta(pre, post).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(HashedBagOfTokens(0), Error);
}

TEST_CASE("anchor and assignment json round trip") {
  std::vector<Anchor> anchors{{"regression", vec({0.25, -1.5, 3}), 3}, {"api_migration", vec({1, 2, 3}), 1}};
  auto back = anchors_from_json(anchors_to_json(anchors));
  REQUIRE(back.size() == 2);
  CHECK(back[0].id == "regression");
  CHECK(back[0].centroid == anchors[0].centroid);
  CHECK(back[1].member_count == 1);

  std::vector<Assignment> as{{"abc", "regression", 0.75}, {"def", std::nullopt, 0.25}};
  CHECK(assignments_from_json(assignments_to_json(as)) == as);
  CHECK_THROWS_AS(anchors_from_json("[{\"id\": 1}]"), Error);
  CHECK_THROWS_AS(assignments_from_json("not json"), Error);
}

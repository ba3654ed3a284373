#include <gtest/gtest.h>

#include <map>

#include "cuberep/counting.hpp"
#include "cuberep/embedding.hpp"
#include "cuberep/error.hpp"
#include "cuberep/generators.hpp"
#include "fixtures.hpp"

using namespace cuberep;
using namespace cuberep::testing;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Enumerates every (I, J) pair directly from G's edges.
std::map<PositionSet, std::uint64_t> brute_buckets(const CubeSubgraph& g, int j, int k) {
  std::map<PositionSet, PositionSet> d;
  g.for_each_edge_at_level(j, [&](const CubeEdge& e) { d[e.support()] |= position_bit(e.flip); });
  std::map<PositionSet, std::uint64_t> buckets;
  for (auto [big, flips] : d)
    for_each_subset_of_size(flips, k, [&](PositionSet i) { ++buckets[big & ~i]; });
  return buckets;
}

}  // namespace

TEST(LevelProfile, FullQ3) {
  const LevelProfile p = level_profile(full_cube(3));
  EXPECT_EQ(p.counts, (std::vector<std::uint64_t>{3, 6, 3}));
  for (double d : p.densities) EXPECT_DOUBLE_EQ(d, 1.0);
  EXPECT_EQ(p.total, 12u);
}

TEST(LevelProfile, EmptyAndFull) {
  const LevelProfile e = level_profile(CubeSubgraph(5, {}));
  EXPECT_EQ(e.counts, std::vector<std::uint64_t>(5, 0));
  const LevelProfile f = level_profile(full_cube(8));
  for (double d : f.densities) EXPECT_DOUBLE_EQ(d, 1.0);
  for (int j = 0; j < 8; ++j) EXPECT_EQ(f.counts[j], level_capacity(8, j));
}

TEST(LevelProfile, LazyCubeUsesClosedForm) {
  const LevelProfile p = level_profile(CubeSubgraph::full(20));
  EXPECT_EQ(p.total, 20ull << 19);
  EXPECT_EQ(p.counts[3], 17u * 1140u);
}

TEST(SelectLevel, Examples) {
  EXPECT_EQ(select_level(level_profile(full_cube(8))).level, 2);
  std::vector<CubeEdge> band;
  full_cube(8).for_each_edge_at_level(3, [&](const CubeEdge& e) { band.push_back(e); });
  EXPECT_EQ(select_level(level_profile(CubeSubgraph(8, band))).level, 3);
  std::vector<CubeEdge> bottom;
  full_cube(8).for_each_edge_at_level(0, [&](const CubeEdge& e) { bottom.push_back(e); });
  const LevelChoice c = select_level(level_profile(CubeSubgraph(8, bottom)));
  EXPECT_EQ(c.level, 0);
  EXPECT_TRUE(c.outside_middle_band);
  EXPECT_THROW(select_level(level_profile(CubeSubgraph(8, {}))), Error);
}

TEST(MiddleBand, Bounds) {
  EXPECT_FALSE(in_middle_band(8, 1));
  EXPECT_TRUE(in_middle_band(8, 2));
  EXPECT_TRUE(in_middle_band(8, 5));
  EXPECT_FALSE(in_middle_band(8, 6));
}

TEST(FlipTable, Examples) {
  const FlipTable full = build_flip_table(full_cube(6), 2);
  EXPECT_EQ(full.entries().size(), 20u);
  for (const auto& e : full.entries()) EXPECT_EQ(e.flips, e.set);
  const CubeSubgraph two = cube_from(4, {"[1*00]", "[*100]"});
  const FlipTable t = build_flip_table(two, 1);
  ASSERT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.entries()[0].set, set_of({1, 2}));
  EXPECT_EQ(t.entries()[0].flips, set_of({1, 2}));
  EXPECT_TRUE(build_flip_table(CubeSubgraph(4, {}), 1).entries().empty());
}

TEST(FlipTable, Completeness) {
  const CubeSubgraph g = random_subgraph(9, 0.5, 11);
  for (int j = 0; j < 9; ++j) {
    const FlipTable t = build_flip_table(g, j);
    g.for_each_edge_at_level(j, [&](const CubeEdge& e) { EXPECT_TRUE(contains_position(t.flips(e.support()), e.flip)); });
  }
}

TEST(SelectAnchor, FullQ6Level2) {
  const AnchorResult a = select_anchor(build_flip_table(full_cube(6), 2), 3);
  EXPECT_EQ(a.anchor, 0u);
  EXPECT_EQ(a.hypergraph.edge_count(), 20u);
  EXPECT_EQ(a.bucket_pairs, 20u);
}

TEST(SelectAnchor, TwoEdgeGraph) {
  const AnchorResult a = select_anchor(build_flip_table(cube_from(4, {"[1*00]", "[*100]"}), 1), 2);
  EXPECT_EQ(a.anchor, 0u);
  EXPECT_EQ(a.hypergraph.edges(), std::vector<PositionSet>{set_of({1, 2})});
}

TEST(SelectAnchor, FullQ4MatchesBruteForce) {
  const CubeSubgraph g = full_cube(4);
  const FlipTable t = build_flip_table(g, 2);
  const AnchorRanking ranking = rank_anchors(t, 2);
  const auto brute = brute_buckets(g, 2, 2);
  EXPECT_EQ(ranking.total_pairs, 12u);
  ASSERT_EQ(ranking.buckets.size(), brute.size());
  for (const auto& b : ranking.buckets) {
    EXPECT_EQ(set_size(b.anchor), 1);
    EXPECT_EQ(b.pairs, brute.at(b.anchor));
  }
  EXPECT_EQ(select_anchor(t, 2).anchor, set_of({1}));
}

TEST(SelectAnchor, Preconditions) {
  const FlipTable t = build_flip_table(full_cube(5), 1);
  EXPECT_THROW(rank_anchors(t, 3), Error);
  EXPECT_THROW(rank_anchors(build_flip_table(CubeSubgraph(5, {}), 1), 2), Error);
}

TEST(AnchorConservation, RandomGraphsBruteForce) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 5);
    const CubeSubgraph g = random_subgraph(n, 0.6, seed);
    for (int j = 1; j < n - 1; ++j)
      for (int k = 1; k <= std::min(j + 1, 3); ++k) {
        const FlipTable t = build_flip_table(g, j);
        std::uint64_t expected = 0;
        for (const auto& e : t.entries()) expected += choose(set_size(e.flips), k);
        if (expected == 0) continue;
        const AnchorRanking r = rank_anchors(t, k);
        std::uint64_t sum = 0;
        for (const auto& b : r.buckets) sum += b.pairs;
        EXPECT_EQ(sum, expected);
        EXPECT_EQ(r.total_pairs, expected);
        EXPECT_EQ(t.pair_count(k), expected);
        const auto brute = brute_buckets(g, j, k);
        EXPECT_EQ(r.buckets.size(), brute.size());
        for (const auto& b : r.buckets) EXPECT_EQ(b.pairs, brute.at(b.anchor));
      }
  }
}

TEST(Convexity, PairCountAtLeastAverageBound) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 6 + static_cast<int>(seed % 5);
    const CubeSubgraph g = random_subgraph(n, 0.3 + 0.035 * static_cast<double>(seed), seed * 31);
    for (int j = 1; j < n - 1; ++j) {
      const FlipTable t = build_flip_table(g, j);
      const double subsets = binomial(n, j + 1).convert_to<double>();
      const double avg = static_cast<double>(t.flip_count()) / subsets;
      for (int k = 1; k <= j + 1; ++k) {
        if (avg < k) continue;
        double c = 1.0;
        for (int i = 0; i < k; ++i) c *= (avg - i) / (i + 1);
        EXPECT_GE(static_cast<double>(t.pair_count(k)) + 1e-9, subsets * c);
      }
    }
  }
}

TEST(LiftEmbedding, IdentityReproducesHost) {
  const Representation r = c8_rep();
  const auto cert = lift_embedding(r, 0, {1, 2, 3, 4}, full_cube(4));
  EXPECT_EQ(cert.edges, r.host);
  EXPECT_TRUE(verify_certificate(cert, full_cube(4)).ok);
}

TEST(LiftEmbedding, SingletonAnchorInQ5) {
  const Representation r = c8_rep();
  const auto cert = lift_embedding(r, set_of({5}), {2, 4, 1, 3}, full_cube(5));
  EXPECT_EQ(cert.edges.size(), 8u);
  EXPECT_TRUE(find_abstract_copy(cert.edges, cycle_graph(8)).has_value());
  EXPECT_TRUE(verify_certificate(cert, full_cube(5)).ok);
}

TEST(LiftEmbedding, MissingEdgeIsNamed) {
  const Representation r = c8_rep();
  const CubeEdge victim = lift_edge(r.host.edges()[3], set_of({5}), {2, 4, 1, 3}, 5);
  const CubeSubgraph g = full_cube(5).without(victim);
  try {
    lift_embedding(r, set_of({5}), {2, 4, 1, 3}, g);
    FAIL() << "expected LiftError";
  } catch (const LiftError& e) {
    EXPECT_EQ(e.missing(), victim);
  }
}

TEST(LiftEmbedding, RejectsBadMaps) {
  const Representation r = c8_rep();
  EXPECT_THROW(lift_embedding(r, 0, {1, 1, 2, 3}, full_cube(5)), Error);
  EXPECT_THROW(lift_embedding(r, set_of({1}), {1, 2, 3, 4}, full_cube(5)), Error);
  EXPECT_THROW(lift_embedding(r, 0, {1, 2, 3}, full_cube(5)), Error);
  EXPECT_THROW(lift_embedding(r, 0, {1, 2, 3, 6}, full_cube(5)), Error);
}

TEST(LiftVertex, AdjacencyPreserved) {
  const std::vector<int> g = {3, 7, 1, 5};
  const PositionSet s = set_of({2, 8});
  full_cube(4).for_each_edge([&](const CubeEdge& e) {
    auto [a, b] = e.endpoints();
    const CubeVertex fa = lift_vertex(a, s, g, 8);
    const CubeVertex fb = lift_vertex(b, s, g, 8);
    EXPECT_EQ(set_size(fa.bits ^ fb.bits), 1);
  });
}

TEST(FindCopy, FullQ6WithC8) {
  const CubeSubgraph g = full_cube(6);
  const FindCopyResult res = find_copy(g, c8_rep());
  ASSERT_EQ(res.outcome, FindCopyOutcome::found);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_TRUE(verify_certificate(*res.certificate, g).ok);
  EXPECT_TRUE(find_abstract_copy(res.certificate->edges, cycle_graph(8)).has_value());
}

TEST(FindCopy, EmptyGraphGivesNone) {
  const FindCopyResult res = find_copy(CubeSubgraph(10, {}), c8_rep());
  EXPECT_FALSE(res.certificate.has_value());
  EXPECT_NE(res.outcome, FindCopyOutcome::found);
}

TEST(FindCopy, RandomQ10Exhaustive) {
  const CubeSubgraph g = random_subgraph(10, 0.9, 2024);
  ASSERT_TRUE(find_abstract_copy(g, cycle_graph(8)).has_value());
  FindCopyOptions o;
  o.exhaustive = true;
  const FindCopyResult res = find_copy(g, c8_rep(), o);
  ASSERT_TRUE(res.certificate.has_value());
  EXPECT_TRUE(verify_certificate(*res.certificate, g).ok);
}

TEST(FindCopy, HostTooLargeForCube) {
  const FindCopyResult res = find_copy(full_cube(5), c14_rep());
  EXPECT_FALSE(res.certificate.has_value());
  EXPECT_EQ(res.outcome, FindCopyOutcome::preconditions_unmet);
}

TEST(VerifyCertificate, DetectsTampering) {
  const CubeSubgraph g = full_cube(6);
  auto cert = *find_copy(g, c8_rep()).certificate;
  auto bad = cert;
  bad.edges = bad.edges.without(bad.edges.edges().front());
  EXPECT_FALSE(verify_certificate(bad, g).ok);
  EXPECT_FALSE(verify_certificate(cert, g.without(cert.edges.edges().back())).ok);
}

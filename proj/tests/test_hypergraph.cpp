#include <gtest/gtest.h>

#include "cuberep/bits.hpp"
#include "cuberep/error.hpp"
#include "cuberep/hypergraph.hpp"

using namespace cuberep;

namespace {

KUniformHypergraph hyper(int m, int k, const std::vector<std::vector<int>>& edges) {
  std::vector<PositionSet> es;
  for (const auto& e : edges) es.push_back(set_of(e));
  return KUniformHypergraph(m, k, es);
}

KUniformHypergraph four_cycle() { return hyper(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace

TEST(Hypergraph, ValidationAndDedup) {
  const auto h = hyper(4, 2, {{1, 2}, {2, 1}, {3, 4}});
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_THROW(hyper(4, 2, {{1, 2, 3}}), Error);
  EXPECT_THROW(hyper(3, 2, {{1, 4}}), Error);
}

TEST(Hypergraph, CompleteAndPartite) {
  EXPECT_EQ(KUniformHypergraph::complete(6, 3).edge_count(), 20u);
  const auto kp = KUniformHypergraph::complete_partite({2, 2, 3});
  EXPECT_EQ(kp.vertex_count(), 7);
  EXPECT_EQ(kp.edge_count(), 12u);
  EXPECT_TRUE(kp.is_partite_under({1, 1, 2, 2, 3, 3, 3}));
  EXPECT_FALSE(kp.is_partite_under({1, 2, 1, 2, 3, 3, 3}));
}

TEST(EmbedHypergraph, SpecExamples) {
  EXPECT_TRUE(embed_hypergraph(four_cycle(), KUniformHypergraph::complete(5, 2)).has_value());
  EXPECT_FALSE(embed_hypergraph(hyper(3, 3, {{1, 2, 3}}), KUniformHypergraph(5, 3, {})).has_value());
}

TEST(EmbedHypergraph, ResultIsAnEmbedding) {
  const auto host = hyper(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}});
  const auto g = embed_hypergraph(four_cycle(), host);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(is_hypergraph_embedding(four_cycle(), host, *g));
  EXPECT_FALSE(embed_hypergraph(four_cycle(), hyper(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}))
                   .has_value());
}

TEST(EmbedHypergraph, ExcludedVerticesAreAvoided) {
  HypergraphEmbedOptions o;
  o.excluded = set_of({1});
  const auto host = KUniformHypergraph::complete(5, 2);
  const auto g = embed_hypergraph(four_cycle(), host, o);
  ASSERT_TRUE(g.has_value());
  for (int v : *g) EXPECT_NE(v, 1);
  o.excluded = set_of({1, 2});
  EXPECT_FALSE(embed_hypergraph(four_cycle(), host, o).has_value());
}

TEST(EmbedHypergraph, CountsEmbeddings) {
  // 4-cycles in K_4: 3 cycles, 8 automorphisms each
  std::uint64_t n = 0;
  for_each_hypergraph_embedding(four_cycle(), KUniformHypergraph::complete(4, 2), [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 24u);
}

TEST(HypergraphIso, RelabelingInvariant) {
  const auto tight = hyper(6, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 2, 6}});
  EXPECT_TRUE(hypergraphs_isomorphic(tight, tight.relabeled({3, 5, 1, 6, 2, 4})));
  const auto fan = hyper(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}});
  EXPECT_FALSE(hypergraphs_isomorphic(tight, fan));
}

TEST(MapSet, AppliesMapping) {
  EXPECT_EQ(map_set(set_of({1, 3}), {5, 2, 7}), set_of({5, 7}));
}

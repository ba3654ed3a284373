#include <gtest/gtest.h>

#include <cmath>

#include "cuberep/error.hpp"
#include "cuberep/generators.hpp"
#include "cuberep/representation.hpp"
#include "fixtures.hpp"

using namespace cuberep;
using namespace cuberep::testing;

namespace {

KUniformHypergraph tight_cycle(int t) {
  std::vector<PositionSet> es;
  for (int i = 0; i < t; ++i) es.push_back(set_of({i + 1, (i + 1) % t + 1, (i + 2) % t + 1}));
  return KUniformHypergraph(t, 3, es);
}

KUniformHypergraph graph_cycle(int t) {
  std::vector<PositionSet> es;
  for (int i = 0; i < t; ++i) es.push_back(set_of({i + 1, (i + 1) % t + 1}));
  return KUniformHypergraph(t, 2, es);
}

}  // namespace

TEST(CycleGraph, Lengths) {
  for (int t : {2, 4, 7}) {
    const AbstractGraph c = gen_cycle_graph(t);
    EXPECT_EQ(c.vertex_count(), 2 * t);
    EXPECT_EQ(c.edge_count(), static_cast<std::size_t>(2 * t));
    for (int v = 0; v < 2 * t; ++v) EXPECT_EQ(c.degree(v), 2);
  }
  EXPECT_THROW(gen_cycle_graph(1), Error);
}

TEST(EvenRep, T4IsReferenceTable) {
  const Representation r = gen_even_cycle_representation(4);
  EXPECT_EQ(r.host, c8_rep().host);
  EXPECT_EQ(r.sigma, kC8Sigma);
}

TEST(EvenRep, FamilyProperties) {
  for (int t = 4; t <= 12; t += 2) {
    const Representation r = gen_even_cycle_representation(t);
    EXPECT_TRUE(verify_representation(r).pass) << t;
    EXPECT_TRUE(are_isomorphic(host_graph(r), cycle_graph(2 * t)));
    const auto h = representation_hypergraph(r);
    EXPECT_EQ(h.edge_count(), static_cast<std::size_t>(t));
    EXPECT_TRUE(hypergraphs_isomorphic(h, graph_cycle(t)));
  }
  EXPECT_THROW(gen_even_cycle_representation(3), Error);
  EXPECT_THROW(gen_even_cycle_representation(2), Error);
}

TEST(OddRep, T7IsReferenceTable) {
  const Representation r = gen_odd_cycle_representation(7);
  EXPECT_EQ(r.host, c14_rep().host);
  EXPECT_EQ(r.sigma, kC14Sigma);
}

TEST(OddRep, FamilyProperties) {
  for (int t = 7; t <= 15; t += 2) {
    const Representation r = gen_odd_cycle_representation(t);
    EXPECT_EQ(r.k, 3);
    EXPECT_TRUE(verify_representation(r).pass) << t;
    EXPECT_TRUE(are_isomorphic(host_graph(r), cycle_graph(2 * t))) << t;
    if (t % 3 == 0) EXPECT_TRUE(hypergraphs_isomorphic(representation_hypergraph(r), tight_cycle(t))) << t;
  }
  EXPECT_THROW(gen_odd_cycle_representation(5), Error);
  EXPECT_THROW(gen_odd_cycle_representation(8), Error);
}

TEST(C14Diagonal, Properties) {
  const Representation r = gen_c14_with_diagonal();
  EXPECT_EQ(r.host.size(), 15u);
  EXPECT_TRUE(r.host.contains(parse_edge("[1100*00]")));
  EXPECT_EQ(tau(parse_edge("[1100*00]")), set_of({1, 2, 5}));
  EXPECT_TRUE(verify_representation(r).pass);
  std::vector<std::pair<int, int>> es = cycle_graph(14).edges();
  es.emplace_back(0, 7);
  EXPECT_TRUE(are_isomorphic(host_graph(r), AbstractGraph(14, es)));
}

TEST(CycleInCube, Examples) {
  EXPECT_EQ(gen_cycle_in_cube(2, 2), full_cube(2));
  for (auto [t, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 4}, {5, 6}, {7, 8}}) {
    const CubeSubgraph g = gen_cycle_in_cube(t, n);
    EXPECT_EQ(g.size(), static_cast<std::uint64_t>(2 * t));
    EXPECT_TRUE(are_isomorphic(to_abstract(g).graph, cycle_graph(2 * t)));
  }
  EXPECT_THROW(gen_cycle_in_cube(5, 4), Error);
  EXPECT_THROW(gen_cycle_in_cube(1, 4), Error);
}

TEST(RandomSubgraph, Extremes) {
  EXPECT_EQ(random_subgraph(6, 1.0, 5), full_cube(6));
  EXPECT_TRUE(random_subgraph(6, 0.0, 5).empty());
  EXPECT_THROW(random_subgraph(6, 1.5, 5), Error);
}

TEST(RandomSubgraph, BinomialStatistics) {
  const double mean = 512.0 * 10 * 0.5;
  const double sd = std::sqrt(512.0 * 10 * 0.25);
  const double size = static_cast<double>(random_subgraph(10, 0.5, 42).size());
  EXPECT_LE(std::abs(size - mean), 4 * sd);
  double total = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) total += static_cast<double>(random_subgraph(8, 0.3, seed).size());
  EXPECT_NEAR(total / 50.0, 1024 * 0.3, 10.0);
}

TEST(RandomSubgraph, Reproducible) {
  EXPECT_EQ(random_subgraph(9, 0.4, 77), random_subgraph(9, 0.4, 77));
  EXPECT_NE(random_subgraph(9, 0.4, 77), random_subgraph(9, 0.4, 78));
}

TEST(SplitMix, KnownVector) {
  // first output of the reference generator seeded with 0
  EXPECT_EQ(splitmix64(0x9E3779B97F4A7C15ull), 0xE220A8397B1DCDAFull);
  const double u = counter_uniform(1, 0);
  EXPECT_GE(u, 0.0);
  EXPECT_LT(u, 1.0);
}

TEST(Families, NamesRoundTrip) {
  for (auto f : {GeneratorFamily::cycle_graph, GeneratorFamily::even_rep, GeneratorFamily::odd_rep,
                 GeneratorFamily::c14_diag, GeneratorFamily::cycle_in_cube, GeneratorFamily::random})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("petersen"), Error);
}

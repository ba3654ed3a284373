#include <gtest/gtest.h>

#include <bit>

#include "cuberep/error.hpp"
#include "cuberep/extremal.hpp"
#include "cuberep/generators.hpp"
#include "fixtures.hpp"

using namespace cuberep;
using namespace cuberep::testing;

namespace {

AbstractGraph path(int vertices) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < vertices; ++i) es.emplace_back(i, i + 1);
  return AbstractGraph(vertices, es);
}

AbstractGraph star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return AbstractGraph(leaves + 1, es);
}

bool contains_graph(const AbstractGraph& target, const AbstractGraph& h) {
  return find_subgraph(h.without_isolated(), target).has_value();
}

// Maximum H-free edge subset of Q_n by trying all 2^e(Q_n) subsets.
std::uint64_t naive_ex_cube(int n, const AbstractGraph& h) {
  const std::vector<CubeEdge> all = full_cube(n).edges();
  const std::uint32_t limit = 1u << all.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<CubeEdge> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) es.push_back(all[i]);
    if (!contains_graph(to_abstract(CubeSubgraph(n, es)).graph, h)) best = size;
  }
  return static_cast<std::uint64_t>(best);
}

bool hyper_contains(const KUniformHypergraph& host, const KUniformHypergraph& pattern) {
  return embed_hypergraph(pattern, host).has_value();
}

std::uint64_t naive_ex_hyper(int m, const KUniformHypergraph& pattern) {
  const auto all = KUniformHypergraph::complete(m, pattern.arity()).edges();
  const std::uint32_t limit = 1u << all.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<PositionSet> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) es.push_back(all[i]);
    if (!hyper_contains(KUniformHypergraph(m, pattern.arity(), es), pattern)) best = size;
  }
  return static_cast<std::uint64_t>(best);
}

KUniformHypergraph graph4cycle() {
  return KUniformHypergraph(4, 2, {set_of({1, 2}), set_of({2, 3}), set_of({3, 4}), set_of({1, 4})});
}

}  // namespace

TEST(ExCube, Q2C4) {
  const auto r = ex_cube(2, cycle_graph(4));
  EXPECT_EQ(r.value, 3u);
  EXPECT_EQ(r.status, ExtremalStatus::exact);
  EXPECT_EQ(r.witness.size(), 3u);
}

TEST(ExCube, Q3C4RegressionConstant) {
  const auto r = ex_cube(3, cycle_graph(4));
  EXPECT_EQ(r.value, 9u);
  EXPECT_EQ(r.status, ExtremalStatus::exact);
  EXPECT_FALSE(find_abstract_copy(r.witness, cycle_graph(4)).has_value());
}

TEST(ExCube, AgreesWithFullEnumeration) {
  const std::vector<AbstractGraph> patterns = {cycle_graph(4), path(3), path(4), star(3), cycle_graph(6),
                                               cycle_graph(8)};
  for (int n = 1; n <= 3; ++n)
    for (const auto& h : patterns) {
      const auto r = ex_cube(n, h);
      EXPECT_EQ(r.value, naive_ex_cube(n, h)) << "n=" << n << " |V(H)|=" << h.vertex_count();
      EXPECT_EQ(r.witness.size(), r.value);
      EXPECT_FALSE(contains_graph(to_abstract(r.witness).graph, h));
    }
}

TEST(ExCube, EdgelessPatternForbidsNothing) {
  EXPECT_EQ(ex_cube(3, AbstractGraph(2, {})).value, 12u);
}

TEST(ExCube, MonotoneAndBounded) {
  for (const auto& h : {cycle_graph(4), path(4), cycle_graph(6)}) {
    std::uint64_t prev = 0;
    for (int n = 1; n <= 4; ++n) {
      const auto r = ex_cube(n, h);
      EXPECT_GE(r.value, prev);
      EXPECT_LE(r.value, full_cube(n).size());
      prev = r.value;
    }
  }
}

TEST(ExCube, ThreadCountDoesNotChangeResult) {
  ExtremalOptions one;
  ExtremalOptions four;
  four.threads = 4;
  for (const auto& h : {cycle_graph(4), cycle_graph(6)}) {
    const auto a = ex_cube(3, h, one);
    const auto b = ex_cube(3, h, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(ExCube, BudgetModeOnQ4) {
  ExtremalOptions o;
  o.time_budget_seconds = 20.0;
  const auto r = ex_cube(4, cycle_graph(4), o);
  EXPECT_GE(r.value, 24u);
  EXPECT_FALSE(find_abstract_copy(r.witness, cycle_graph(4)).has_value());
}

TEST(ExCube, NodeBudgetGivesLowerBoundStatus) {
  ExtremalOptions o;
  o.node_budget = 5;
  const auto r = ex_cube(4, cycle_graph(4), o);
  EXPECT_EQ(r.status, ExtremalStatus::lower_bound);
  EXPECT_FALSE(find_abstract_copy(r.witness, cycle_graph(4)).has_value());
}

TEST(ExCube, ExactModeCap) {
  EXPECT_THROW(ex_cube(7, cycle_graph(4)), CapExceeded);
}

TEST(ExHypergraph, SpecExamples) {
  EXPECT_EQ(ex_hypergraph(4, graph4cycle()).value, 4u);
  EXPECT_EQ(ex_hypergraph(5, KUniformHypergraph(3, 3, {set_of({1, 2, 3})})).value, 0u);
  EXPECT_EQ(ex_hypergraph(5, KUniformHypergraph(3, 3, {})).value, 10u);
  EXPECT_EQ(ex_hypergraph(5, KUniformHypergraph(2, 2, {})).value, 10u);
}

TEST(ExHypergraph, ZarankiewiczSmallValues) {
  const std::vector<std::uint64_t> expected = {4, 6, 7, 9, 11};
  for (int m = 4; m <= 8; ++m) EXPECT_EQ(ex_hypergraph(m, graph4cycle()).value, expected[m - 4]) << m;
}

TEST(ExHypergraph, AgreesWithFullEnumeration) {
  const KUniformHypergraph triangle(3, 2, {set_of({1, 2}), set_of({2, 3}), set_of({1, 3})});
  const KUniformHypergraph path3(3, 2, {set_of({1, 2}), set_of({2, 3})});
  const KUniformHypergraph k112 = KUniformHypergraph::complete_partite({1, 1, 2});
  const KUniformHypergraph loose(5, 3, {set_of({1, 2, 3}), set_of({3, 4, 5})});
  const std::vector<std::pair<int, KUniformHypergraph>> cases = {
      {5, triangle}, {5, path3}, {5, graph4cycle()}, {6, triangle}, {5, k112}, {5, loose}, {4, k112}};
  for (const auto& [m, pattern] : cases) {
    const auto r = ex_hypergraph(m, pattern);
    EXPECT_EQ(r.value, naive_ex_hyper(m, pattern)) << "m=" << m << " k=" << pattern.arity();
    EXPECT_EQ(r.witness.edge_count(), r.value);
    EXPECT_FALSE(hyper_contains(r.witness, pattern));
  }
}

TEST(ExHypergraph, UpperSanity) {
  for (int m = 3; m <= 6; ++m) {
    const auto r = ex_hypergraph(m, KUniformHypergraph::complete_partite({1, 1, 2}));
    EXPECT_LE(r.value, KUniformHypergraph::complete(m, 3).edge_count());
  }
}

TEST(CorollaryExponent, ReferenceTables) {
  const auto c8 = corollary_exponent(c8_rep());
  EXPECT_EQ(c8.delta, Rational(1, 2));
  EXPECT_EQ(c8.exponent, Rational(3, 4));
  const auto c14 = corollary_exponent(c14_rep());
  EXPECT_EQ(c14.sorted_sizes, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(c14.delta, Rational(1, 4));
  EXPECT_EQ(c14.exponent, Rational(11, 12));
  EXPECT_EQ(corollary_exponent(std::vector<int>{1, 1, 1, 1}).delta, Rational(1));
}

TEST(CorollaryExponent, SortsBeforeExcludingLargest) {
  const auto a = corollary_exponent(std::vector<int>{3, 2, 2});
  EXPECT_EQ(a.sorted_sizes, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(a.delta, Rational(1, 4));
}

TEST(CorollaryExponent, EvenCycleFamily) {
  // sizes (t/2, t/2) give 1 - 1/t, which meets 1/2 + 1/t only at t = 4
  for (int t = 4; t <= 12; t += 2) {
    const auto ce = corollary_exponent(gen_even_cycle_representation(t));
    EXPECT_EQ(ce.sorted_sizes, (std::vector<int>{t / 2, t / 2}));
    EXPECT_EQ(ce.exponent, Rational(1) - Rational(1, t)) << t;
    EXPECT_EQ(ce.exponent == Rational(1, 2) + Rational(1, t), t == 4) << t;
  }
}

TEST(ErdosBound, ExactRows) {
  const auto r = erdos_bound_check({2, 2}, 4, 7);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.delta, Rational(1, 2));
  const std::vector<std::uint64_t> expected = {4, 6, 7, 9};
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    EXPECT_EQ(r.rows[i].value, expected[i]);
    EXPECT_EQ(r.rows[i].status, ExtremalStatus::exact);
    EXPECT_GT(r.rows[i].ratio, 0.0);
  }
  const auto single = erdos_bound_check({1, 1}, 3, 5);
  for (const auto& row : single.rows) EXPECT_EQ(row.value, 0u);
  const auto k3 = erdos_bound_check({1, 1, 2}, 5, 5);
  EXPECT_EQ(k3.rows.at(0).value, naive_ex_hyper(5, KUniformHypergraph::complete_partite({1, 1, 2})));
}

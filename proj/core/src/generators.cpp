#include "cuberep/generators.hpp"

#include "cuberep/error.hpp"

namespace cuberep {

GeneratorFamily parse_family(std::string_view name) {
  if (name == "cycle-graph") return GeneratorFamily::cycle_graph;
  if (name == "even-rep") return GeneratorFamily::even_rep;
  if (name == "odd-rep") return GeneratorFamily::odd_rep;
  if (name == "c14-diag") return GeneratorFamily::c14_diag;
  if (name == "cycle-in-cube") return GeneratorFamily::cycle_in_cube;
  if (name == "random") return GeneratorFamily::random;
  throw InvalidArgument("unknown generator family '" + std::string(name) + "'");
}

std::string family_name(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::cycle_graph:
      return "cycle-graph";
    case GeneratorFamily::even_rep:
      return "even-rep";
    case GeneratorFamily::odd_rep:
      return "odd-rep";
    case GeneratorFamily::c14_diag:
      return "c14-diag";
    case GeneratorFamily::cycle_in_cube:
      return "cycle-in-cube";
    case GeneratorFamily::random:
      return "random";
  }
  return "?";
}

AbstractGraph cycle_graph(int length) {
  if (length < 3) throw InvalidArgument("cycle length must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < length; ++i) e.emplace_back(i, (i + 1) % length);
  return AbstractGraph(length, std::move(e));
}

AbstractGraph gen_cycle_graph(int t) {
  if (t < 2) throw InvalidArgument("cycle-graph needs t >= 2");
  return cycle_graph(2 * t);
}

namespace {

// Host edges of the closed walk P_0, P_0|P_1, P_1, P_1|P_2, ... over pairs.
std::vector<CubeEdge> pair_walk_edges(int l, const std::vector<PositionSet>& pairs) {
  std::vector<CubeEdge> edges;
  const std::size_t t = pairs.size();
  for (std::size_t i = 0; i < t; ++i) {
    const PositionSet a = pairs[i];
    const PositionSet b = pairs[(i + 1) % t];
    const PositionSet u = a | b;
    edges.push_back(CubeEdge::make(l, a, std::countr_zero(u & ~a) + 1));
    edges.push_back(CubeEdge::make(l, b, std::countr_zero(u & ~b) + 1));
  }
  return edges;
}

Representation certified(Representation r, const AbstractGraph& expected) {
  if (!verify_representation(r).pass) throw Error("internal: generated representation fails verification");
  if (!are_isomorphic(host_graph(r), expected)) throw Error("internal: generated host has the wrong shape");
  return r;
}

}  // namespace

Representation gen_even_cycle_representation(int t) {
  if (t < 4 || t % 2 != 0) throw InvalidArgument("even-rep needs even t >= 4, got " + std::to_string(t));
  if (t > kMaxPositions) throw CapExceeded("dimension", kMaxPositions, t);
  std::vector<CubeEdge> edges;
  std::vector<int> sigma(t);
  for (int i = 1; i <= t; ++i) {
    const int next = i % t + 1;
    edges.push_back(CubeEdge::make(t, position_bit(i), next));
    edges.push_back(CubeEdge::make(t, position_bit(next), i));
    sigma[i - 1] = i % 2 == 1 ? 1 : 2;
  }
  return certified(Representation(t, 2, CubeSubgraph(t, std::move(edges)), std::move(sigma)),
                   gen_cycle_graph(t));
}

Representation gen_odd_cycle_representation(int t) {
  if (t % 2 == 0) throw InvalidArgument("odd-rep needs odd t, got " + std::to_string(t));
  if (t == 5) throw InvalidArgument("odd-rep: C_10 has no 3-partite representation to generate");
  if (t < 7) throw InvalidArgument("odd-rep needs t >= 7, got " + std::to_string(t));
  if (t > kMaxPositions) throw CapExceeded("dimension", kMaxPositions, t);
  std::vector<PositionSet> pairs;
  std::vector<int> sigma(t);
  auto pair = [](int a, int b) { return position_bit(a) | position_bit(b); };
  if (t % 3 == 0) {
    for (int i = 1; i <= t; ++i) {
      pairs.push_back(pair(i, i % t + 1));
      sigma[i - 1] = (i - 1) % 3 + 1;
    }
  } else {
    pairs = {pair(1, 2), pair(2, 3), pair(2, 4), pair(2, 5)};
    for (int i = 5; i <= t; ++i) pairs.push_back(pair(1, i));
    sigma[0] = 1;
    sigma[1] = 2;
    sigma[2] = 3;
    sigma[3] = 1;
    sigma[4] = 3;
    for (int i = 6; i <= t; ++i) sigma[i - 1] = i % 2 == 0 ? 2 : 3;
  }
  return certified(Representation(t, 3, CubeSubgraph(t, pair_walk_edges(t, pairs)), std::move(sigma)),
                   gen_cycle_graph(t));
}

Representation gen_c14_with_diagonal() {
  Representation base = gen_odd_cycle_representation(7);
  std::vector<CubeEdge> edges = base.host.edges();
  edges.push_back(parse_edge("[1100*00]"));
  AbstractGraph expected = [] {
    auto e = cycle_graph(14).edges();
    e.emplace_back(0, 7);
    return AbstractGraph(14, std::move(e));
  }();
  return certified(Representation(7, 3, CubeSubgraph(7, std::move(edges)), base.sigma), expected);
}

CubeSubgraph gen_cycle_in_cube(int t, int n) {
  if (n < 1 || n > kDefaultMaxDimension) throw InvalidArgument("cycle-in-cube: n out of range");
  if (t < 2 || t > n)
    throw InvalidArgument("cycle-in-cube builds C_2t only for 2 <= t <= n (got t=" + std::to_string(t) +
                          ", n=" + std::to_string(n) + ")");
  std::vector<PositionSet> walk;
  for (int i = 0; i <= t; ++i) walk.push_back(full_set(i));
  for (int i = 1; i < t; ++i) walk.push_back(full_set(t) & ~full_set(i));
  std::vector<CubeEdge> edges;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const CubeVertex a{n, walk[i]};
    const CubeVertex b{n, walk[(i + 1) % walk.size()]};
    edges.push_back(a.level() < b.level() ? edge_between(a, b) : edge_between(b, a));
  }
  CubeSubgraph g(n, std::move(edges));
  if (!are_isomorphic(to_abstract(g).graph, gen_cycle_graph(t)))
    throw Error("internal: cycle-in-cube produced a non-cycle");
  return g;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t x = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

CubeSubgraph random_subgraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("random: p must lie in [0, 1]");
  if (n > kMaterializeLimit) throw CapExceeded("random subgraph dimension", kMaterializeLimit, n);
  const CubeSubgraph full = full_cube(n);
  std::vector<CubeEdge> kept;
  std::uint64_t index = 0;
  full.for_each_edge([&](const CubeEdge& e) {
    if (counter_uniform(seed, index++) < p) kept.push_back(e);
  });
  return CubeSubgraph(n, std::move(kept));
}

}  // namespace cuberep

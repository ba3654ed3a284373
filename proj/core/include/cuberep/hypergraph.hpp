#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cuberep/bits.hpp"

namespace cuberep {

/// A k-uniform hypergraph on vertices {1..m}; each edge is a k-subset packed
/// as a PositionSet. Edges are kept sorted (compare_sets) and unique.
class KUniformHypergraph {
 public:
  KUniformHypergraph() = default;
  /// Throws InvalidArgument if an edge has the wrong size or leaves {1..m}.
  KUniformHypergraph(int vertex_count, int arity, std::vector<PositionSet> edges);

  /// Every k-subset of {1..m}.
  static KUniformHypergraph complete(int m, int k);
  /// K_k^(k)(s_1,...,s_k): class i occupies the next s_i consecutive vertices.
  static KUniformHypergraph complete_partite(const std::vector<int>& sizes);

  int vertex_count() const { return vertex_count_; }
  int arity() const { return arity_; }
  const std::vector<PositionSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(PositionSet edge) const;
  int degree(int v) const;

  /// True iff every edge meets each class exactly once; classes[v-1] ∈ {1..k}.
  bool is_partite_under(const std::vector<int>& classes) const;

  /// Vertex v becomes perm[v-1].
  KUniformHypergraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const KUniformHypergraph&, const KUniformHypergraph&) = default;

 private:
  int vertex_count_ = 0;
  int arity_ = 0;
  std::vector<PositionSet> edges_;
};

struct HypergraphEmbedOptions {
  int max_pattern_vertices = 24;
  /// Host vertices no pattern vertex may use.
  PositionSet excluded = 0;
  /// 0 = unlimited; exceeding throws CapExceeded.
  std::uint64_t node_limit = 0;
};

/// An injective g with g[i-1] = image of pattern vertex i, mapping every
/// pattern edge onto a host edge. Pattern vertices are tried in descending
/// degree order (ties: more edges shared with already-placed vertices).
/// Partial edge images must lie inside some host edge.
std::optional<std::vector<int>> embed_hypergraph(const KUniformHypergraph& pattern,
                                                 const KUniformHypergraph& host,
                                                 const HypergraphEmbedOptions& options = {});

/// Visits every embedding until `visit` returns false; isolated pattern
/// vertices are filled once per core embedding with the smallest free host
/// vertices. Returns the number visited.
std::uint64_t for_each_hypergraph_embedding(
    const KUniformHypergraph& pattern, const KUniformHypergraph& host,
    const std::function<bool(const std::vector<int>&)>& visit,
    const HypergraphEmbedOptions& options = {});

bool is_hypergraph_embedding(const KUniformHypergraph& pattern, const KUniformHypergraph& host,
                             const std::vector<int>& g);

/// Image of a pattern edge under g.
PositionSet map_set(PositionSet set, const std::vector<int>& g);

bool hypergraphs_isomorphic(const KUniformHypergraph& a, const KUniformHypergraph& b);

}  // namespace cuberep

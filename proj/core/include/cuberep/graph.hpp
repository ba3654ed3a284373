#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cuberep/cube.hpp"

namespace cuberep {

/// A simple undirected graph on vertices 0..vertex_count-1.
class AbstractGraph {
 public:
  AbstractGraph() = default;
  /// Throws InvalidArgument on loops or out-of-range endpoints; duplicate
  /// edges are merged.
  AbstractGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted, each pair (u, v) with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  /// Vertex v becomes perm[v].
  AbstractGraph relabeled(const std::vector<int>& perm) const;
  /// Drops degree-0 vertices, keeping the relative order of the rest.
  AbstractGraph without_isolated() const;
  bool is_bipartite() const;

  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// The abstract graph spanned by a cube subgraph's edges; vertex i of
/// `graph` is the cube vertex `labels[i]` (labels sorted by mask).
struct CubeGraphView {
  AbstractGraph graph;
  std::vector<CubeVertex> labels;
};

CubeGraphView to_abstract(const CubeSubgraph& g);

struct SubgraphSearchOptions {
  int max_pattern_vertices = 20;
  /// 0 = unlimited. Exceeding the limit throws CapExceeded.
  std::uint64_t node_limit = 0;
};

/// Injective maps pattern -> target sending every pattern edge to a target
/// edge (not necessarily induced). Pattern vertices are ordered with the
/// highest degree first, then greedily by the number of already-placed
/// neighbours; each candidate must be adjacent to every placed neighbour's
/// image and have at least the pattern vertex's degree.
std::optional<std::vector<int>> find_subgraph(const AbstractGraph& pattern,
                                              const AbstractGraph& target,
                                              const SubgraphSearchOptions& options = {});

/// Visits every such map in search order until `visit` returns false.
/// Returns the number of maps visited.
std::uint64_t for_each_subgraph(const AbstractGraph& pattern, const AbstractGraph& target,
                                const std::function<bool(const std::vector<int>&)>& visit,
                                const SubgraphSearchOptions& options = {});

bool are_isomorphic(const AbstractGraph& a, const AbstractGraph& b);

/// H-vertex i lands on cube vertex `map[i]`.
using VertexMap = std::vector<CubeVertex>;

/// A copy of H inside G. Isolated vertices of H take the smallest unused
/// cube vertices.
std::optional<VertexMap> find_abstract_copy(const CubeSubgraph& g, const AbstractGraph& h,
                                            const SubgraphSearchOptions& options = {});

/// Checks that `map` is injective and edge-preserving from h into g.
bool is_copy(const CubeSubgraph& g, const AbstractGraph& h, const VertexMap& map);

}  // namespace cuberep

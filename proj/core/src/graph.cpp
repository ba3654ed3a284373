#include "cuberep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "cuberep/error.hpp"

namespace cuberep {

AbstractGraph::AbstractGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), adjacency_(std::max(vertex_count, 0)) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside vertex range");
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool AbstractGraph::adjacent(int u, int v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

AbstractGraph AbstractGraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != vertex_count_)
    throw InvalidArgument("permutation size mismatch");
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return AbstractGraph(vertex_count_, std::move(e));
}

AbstractGraph AbstractGraph::without_isolated() const {
  std::vector<int> index(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v)
    if (degree(v) > 0) index[v] = next++;
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(index[u], index[v]);
  return AbstractGraph(next, std::move(e));
}

bool AbstractGraph::is_bipartite() const {
  std::vector<int> side(vertex_count_, -1);
  for (int s = 0; s < vertex_count_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adjacency_[u]) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

CubeGraphView to_abstract(const CubeSubgraph& g) {
  std::vector<PositionSet> masks;
  masks.reserve(2 * g.size());
  g.for_each_edge([&](const CubeEdge& e) {
    masks.push_back(e.ones);
    masks.push_back(e.support());
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  auto index_of = [&](PositionSet m) {
    return static_cast<int>(std::lower_bound(masks.begin(), masks.end(), m) - masks.begin());
  };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  g.for_each_edge([&](const CubeEdge& e) { edges.emplace_back(index_of(e.ones), index_of(e.support())); });
  CubeGraphView view{AbstractGraph(static_cast<int>(masks.size()), std::move(edges)), {}};
  view.labels.reserve(masks.size());
  for (PositionSet m : masks) view.labels.push_back(CubeVertex{g.dimension(), m});
  return view;
}

namespace {

class SubgraphSearcher {
 public:
  SubgraphSearcher(const AbstractGraph& pattern, const AbstractGraph& target,
                   const SubgraphSearchOptions& options)
      : pattern_(pattern), target_(target), options_(options) {
    const int n = pattern.vertex_count();
    order_.reserve(n);
    std::vector<int> placed_neighbours(n, 0);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == -1 || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] &&
             pattern.degree(v) > pattern.degree(best)))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (int w : pattern.neighbours(best)) ++placed_neighbours[w];
    }
    back_.resize(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order_[i]] = i;
    for (int i = 0; i < n; ++i)
      for (int w : pattern.neighbours(order_[i]))
        if (position[w] < i) back_[i].push_back(w);
    map_.assign(n, -1);
    used_.assign(target.vertex_count(), false);
  }

  std::uint64_t run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    found_ = 0;
    stop_ = false;
    if (pattern_.vertex_count() > target_.vertex_count()) return 0;
    extend(0);
    return found_;
  }

 private:
  void extend(int depth) {
    if (stop_) return;
    if (++nodes_ > options_.node_limit && options_.node_limit != 0)
      throw CapExceeded("subgraph search nodes", static_cast<std::int64_t>(options_.node_limit),
                        static_cast<std::int64_t>(nodes_));
    if (depth == static_cast<int>(order_.size())) {
      ++found_;
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    const int v = order_[depth];
    const auto& back = back_[depth];
    auto try_candidate = [&](int c) {
      if (used_[c] || target_.degree(c) < pattern_.degree(v)) return;
      for (std::size_t i = 1; i < back.size(); ++i)
        if (!target_.adjacent(c, map_[back[i]])) return;
      map_[v] = c;
      used_[c] = true;
      extend(depth + 1);
      used_[c] = false;
      map_[v] = -1;
    };
    if (!back.empty()) {
      const auto& cands = target_.neighbours(map_[back[0]]);
      for (int c : cands) {
        try_candidate(c);
        if (stop_) return;
      }
    } else {
      for (int c = 0; c < target_.vertex_count(); ++c) {
        try_candidate(c);
        if (stop_) return;
      }
    }
  }

  const AbstractGraph& pattern_;
  const AbstractGraph& target_;
  SubgraphSearchOptions options_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::vector<int> map_;
  std::vector<bool> used_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  std::uint64_t found_ = 0;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

void check_pattern_cap(const AbstractGraph& pattern, const SubgraphSearchOptions& options) {
  if (pattern.vertex_count() > options.max_pattern_vertices)
    throw CapExceeded("pattern vertices", options.max_pattern_vertices, pattern.vertex_count());
}

}  // namespace

std::uint64_t for_each_subgraph(const AbstractGraph& pattern, const AbstractGraph& target,
                                const std::function<bool(const std::vector<int>&)>& visit,
                                const SubgraphSearchOptions& options) {
  check_pattern_cap(pattern, options);
  SubgraphSearcher s(pattern, target, options);
  return s.run(visit);
}

std::optional<std::vector<int>> find_subgraph(const AbstractGraph& pattern,
                                              const AbstractGraph& target,
                                              const SubgraphSearchOptions& options) {
  std::optional<std::vector<int>> result;
  for_each_subgraph(
      pattern, target,
      [&](const std::vector<int>& m) {
        result = m;
        return false;
      },
      options);
  return result;
}

bool are_isomorphic(const AbstractGraph& a, const AbstractGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(a.vertex_count()), db(b.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) da[v] = a.degree(v);
  for (int v = 0; v < b.vertex_count(); ++v) db[v] = b.degree(v);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  SubgraphSearchOptions options;
  options.max_pattern_vertices = std::max(a.vertex_count(), 1);
  return find_subgraph(a, b, options).has_value();
}

std::optional<VertexMap> find_abstract_copy(const CubeSubgraph& g, const AbstractGraph& h,
                                            const SubgraphSearchOptions& options) {
  check_pattern_cap(h, options);
  if (static_cast<std::uint64_t>(h.vertex_count()) > (std::uint64_t{1} << g.dimension()))
    return std::nullopt;
  std::vector<int> core_index;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 0) core_index.push_back(v);
  const AbstractGraph core = h.without_isolated();
  const CubeGraphView view = to_abstract(g);
  auto core_map = find_subgraph(core, view.graph, options);
  if (!core_map) return std::nullopt;

  VertexMap out(h.vertex_count(), CubeVertex{g.dimension(), 0});
  std::vector<PositionSet> taken;
  for (std::size_t i = 0; i < core_index.size(); ++i) {
    out[core_index[i]] = view.labels[(*core_map)[i]];
    taken.push_back(view.labels[(*core_map)[i]].bits);
  }
  std::sort(taken.begin(), taken.end());
  PositionSet next = 0;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) > 0) continue;
    while (std::binary_search(taken.begin(), taken.end(), next)) ++next;
    out[v] = CubeVertex{g.dimension(), next++};
  }
  return out;
}

bool is_copy(const CubeSubgraph& g, const AbstractGraph& h, const VertexMap& map) {
  if (static_cast<int>(map.size()) != h.vertex_count()) return false;
  std::vector<PositionSet> seen;
  for (const auto& v : map) {
    if (v.dimension != g.dimension()) return false;
    seen.push_back(v.bits);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (const auto& [u, v] : h.edges()) {
    const PositionSet diff = map[u].bits ^ map[v].bits;
    if (set_size(diff) != 1) return false;
    if (!g.contains(edge_between(map[u], map[v]))) return false;
  }
  return true;
}

}  // namespace cuberep

#include "cuberep/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "cuberep/error.hpp"

namespace cuberep {

KUniformHypergraph::KUniformHypergraph(int vertex_count, int arity, std::vector<PositionSet> edges)
    : vertex_count_(vertex_count), arity_(arity) {
  if (vertex_count < 0 || vertex_count > kMaxPositions)
    throw InvalidArgument("hypergraph vertex count out of range: " + std::to_string(vertex_count));
  if (arity < 1) throw InvalidArgument("hypergraph arity must be >= 1");
  for (PositionSet e : edges) {
    if (set_size(e) != arity)
      throw InvalidArgument("edge " + render_set(e) + " is not a " + std::to_string(arity) + "-set");
    if ((e & ~full_set(vertex_count)) != 0)
      throw InvalidArgument("edge " + render_set(e) + " leaves {1.." + std::to_string(vertex_count) +
                            "}");
  }
  std::sort(edges.begin(), edges.end(), set_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

KUniformHypergraph KUniformHypergraph::complete(int m, int k) {
  std::vector<PositionSet> e;
  for_each_subset_of_size(full_set(m), k, [&](PositionSet s) { e.push_back(s); });
  return KUniformHypergraph(m, k, std::move(e));
}

KUniformHypergraph KUniformHypergraph::complete_partite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw InvalidArgument("complete partite hypergraph needs at least one class");
  std::vector<PositionSet> classes;
  int next = 1;
  for (int s : sizes) {
    if (s < 1) throw InvalidArgument("partite class sizes must be >= 1");
    PositionSet c = 0;
    for (int i = 0; i < s; ++i) c |= position_bit(next++);
    classes.push_back(c);
  }
  const int m = next - 1;
  if (m > kMaxPositions) throw CapExceeded("hypergraph vertices", kMaxPositions, m);
  std::vector<PositionSet> edges{0};
  for (PositionSet c : classes) {
    std::vector<PositionSet> grown;
    for (PositionSet e : edges) for_each_position(c, [&](int p) { grown.push_back(e | position_bit(p)); });
    edges = std::move(grown);
  }
  return KUniformHypergraph(m, static_cast<int>(sizes.size()), std::move(edges));
}

bool KUniformHypergraph::contains(PositionSet edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge, set_less);
}

int KUniformHypergraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [&](PositionSet e) { return contains_position(e, v); }));
}

bool KUniformHypergraph::is_partite_under(const std::vector<int>& classes) const {
  if (static_cast<int>(classes.size()) != vertex_count_) return false;
  for (PositionSet e : edges_) {
    unsigned seen = 0;
    bool ok = true;
    for_each_position(e, [&](int p) {
      const int c = classes[p - 1];
      if (c < 1 || c > arity_ || (seen & (1u << c))) ok = false;
      else seen |= 1u << c;
    });
    if (!ok) return false;
  }
  return true;
}

KUniformHypergraph KUniformHypergraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != vertex_count_) throw InvalidArgument("permutation size mismatch");
  std::vector<PositionSet> e;
  e.reserve(edges_.size());
  for (PositionSet x : edges_) e.push_back(map_set(x, perm));
  return KUniformHypergraph(vertex_count_, arity_, std::move(e));
}

PositionSet map_set(PositionSet set, const std::vector<int>& g) {
  PositionSet out = 0;
  for_each_position(set, [&](int p) { out |= position_bit(g[p - 1]); });
  return out;
}

namespace {

class HyperEmbedder {
 public:
  HyperEmbedder(const KUniformHypergraph& pattern, const KUniformHypergraph& host,
                const HypergraphEmbedOptions& options)
      : pattern_(pattern), host_(host), options_(options), host_set_(host.edges().begin(), host.edges().end()) {
    const int l = pattern.vertex_count();
    std::vector<int> degree(l + 1, 0);
    for (PositionSet e : pattern.edges()) for_each_position(e, [&](int p) { ++degree[p]; });
    std::vector<int> hdeg(host.vertex_count() + 1, 0);
    for (PositionSet e : host.edges()) for_each_position(e, [&](int p) { ++hdeg[p]; });
    host_degree_ = hdeg;
    pattern_degree_ = degree;

    // Placement order over non-isolated vertices.
    PositionSet placed = 0;
    std::vector<bool> done(l + 1, false);
    while (true) {
      int best = -1;
      int best_shared = -1;
      for (int v = 1; v <= l; ++v) {
        if (done[v] || degree[v] == 0) continue;
        int shared = 0;
        for (PositionSet e : pattern.edges())
          if (contains_position(e, v) && (e & placed) != 0) ++shared;
        if (best == -1 || degree[v] > degree[best] ||
            (degree[v] == degree[best] && shared > best_shared)) {
          best = v;
          best_shared = shared;
        }
      }
      if (best == -1) break;
      done[best] = true;
      placed |= position_bit(best);
      order_.push_back(best);
    }
    for (int v = 1; v <= l; ++v)
      if (degree[v] == 0) isolated_.push_back(v);

    complete_.resize(order_.size());
    partial_.resize(order_.size());
    PositionSet so_far = 0;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int v = order_[i];
      so_far |= position_bit(v);
      for (PositionSet e : pattern.edges()) {
        if (!contains_position(e, v)) continue;
        if ((e & ~so_far) == 0) complete_[i].push_back(e);
        else partial_[i].push_back(e);
      }
    }
    if (pattern.arity() <= 8) {
      use_shadow_ = true;
      for (PositionSet e : host.edges()) {
        for (int size = 1; size < pattern.arity(); ++size)
          for_each_subset_of_size(e, size, [&](PositionSet s) { shadow_.insert(s); });
      }
    }
    g_.assign(l, 0);
  }

  std::uint64_t run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    if (pattern_.arity() != host_.arity()) throw InvalidArgument("arity mismatch between pattern and host");
    const int available = set_size(full_set(host_.vertex_count()) & ~options_.excluded);
    if (pattern_.vertex_count() > available) return 0;
    used_ = options_.excluded;
    extend(0);
    return visited_;
  }

 private:
  PositionSet image_of(PositionSet e) const {
    PositionSet out = 0;
    for_each_position(e, [&](int p) {
      if (g_[p - 1] != 0) out |= position_bit(g_[p - 1]);
    });
    return out;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (++nodes_ > options_.node_limit && options_.node_limit != 0)
      throw CapExceeded("hypergraph embedding nodes", static_cast<std::int64_t>(options_.node_limit),
                        static_cast<std::int64_t>(nodes_));
    if (depth == order_.size()) {
      finish();
      return;
    }
    const int v = order_[depth];
    for (int c = 1; c <= host_.vertex_count(); ++c) {
      if (contains_position(used_, c) || host_degree_[c] < pattern_degree_[v]) continue;
      g_[v - 1] = c;
      bool ok = true;
      for (PositionSet e : complete_[depth])
        if (!host_set_.count(image_of(e))) {
          ok = false;
          break;
        }
      if (ok && use_shadow_)
        for (PositionSet e : partial_[depth])
          if (!shadow_.count(image_of(e))) {
            ok = false;
            break;
          }
      if (ok) {
        used_ |= position_bit(c);
        extend(depth + 1);
        used_ &= ~position_bit(c);
      }
      g_[v - 1] = 0;
      if (stop_) return;
    }
  }

  void finish() {
    PositionSet used = used_;
    int c = 1;
    for (int v : isolated_) {
      while (c <= host_.vertex_count() && contains_position(used, c)) ++c;
      if (c > host_.vertex_count()) return;
      g_[v - 1] = c;
      used |= position_bit(c);
    }
    ++visited_;
    if (!(*visit_)(g_)) stop_ = true;
    for (int v : isolated_) g_[v - 1] = 0;
  }

  const KUniformHypergraph& pattern_;
  const KUniformHypergraph& host_;
  HypergraphEmbedOptions options_;
  std::unordered_set<PositionSet> host_set_;
  std::unordered_set<PositionSet> shadow_;
  bool use_shadow_ = false;
  std::vector<int> host_degree_;
  std::vector<int> pattern_degree_;
  std::vector<int> order_;
  std::vector<int> isolated_;
  std::vector<std::vector<PositionSet>> complete_;
  std::vector<std::vector<PositionSet>> partial_;
  std::vector<int> g_;
  PositionSet used_ = 0;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  std::uint64_t visited_ = 0;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

}  // namespace

std::uint64_t for_each_hypergraph_embedding(const KUniformHypergraph& pattern,
                                            const KUniformHypergraph& host,
                                            const std::function<bool(const std::vector<int>&)>& visit,
                                            const HypergraphEmbedOptions& options) {
  if (pattern.arity() != host.arity())
    throw InvalidArgument("arity mismatch: pattern " + std::to_string(pattern.arity()) + ", host " +
                          std::to_string(host.arity()));
  if (pattern.vertex_count() > options.max_pattern_vertices)
    throw CapExceeded("pattern vertices", options.max_pattern_vertices, pattern.vertex_count());
  HyperEmbedder e(pattern, host, options);
  return e.run(visit);
}

std::optional<std::vector<int>> embed_hypergraph(const KUniformHypergraph& pattern,
                                                 const KUniformHypergraph& host,
                                                 const HypergraphEmbedOptions& options) {
  std::optional<std::vector<int>> result;
  for_each_hypergraph_embedding(
      pattern, host,
      [&](const std::vector<int>& g) {
        result = g;
        return false;
      },
      options);
  return result;
}

bool is_hypergraph_embedding(const KUniformHypergraph& pattern, const KUniformHypergraph& host,
                             const std::vector<int>& g) {
  if (static_cast<int>(g.size()) != pattern.vertex_count()) return false;
  PositionSet seen = 0;
  for (int x : g) {
    if (x < 1 || x > host.vertex_count() || contains_position(seen, x)) return false;
    seen |= position_bit(x);
  }
  for (PositionSet e : pattern.edges())
    if (!host.contains(map_set(e, g))) return false;
  return true;
}

bool hypergraphs_isomorphic(const KUniformHypergraph& a, const KUniformHypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arity() != b.arity() ||
      a.edge_count() != b.edge_count())
    return false;
  HypergraphEmbedOptions options;
  options.max_pattern_vertices = kMaxPositions;
  return embed_hypergraph(a, b, options).has_value();
}

}  // namespace cuberep

#include "cuberep/representation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cuberep/error.hpp"

namespace cuberep {

Representation::Representation(int l_, int k_, CubeSubgraph host_, std::vector<int> sigma_)
    : l(l_), k(k_), host(std::move(host_)), sigma(std::move(sigma_)) {
  if (l < 1 || l > kMaxPositions) throw InvalidArgument("host dimension l out of range: " + std::to_string(l));
  if (k < 1) throw InvalidArgument("arity k must be >= 1");
  if (static_cast<int>(sigma.size()) != l)
    throw InvalidArgument("sigma has " + std::to_string(sigma.size()) + " values, expected l=" +
                          std::to_string(l));
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] < 1 || sigma[i] > k)
      throw InvalidArgument("sigma(" + std::to_string(i + 1) + ")=" + std::to_string(sigma[i]) +
                            " outside {1.." + std::to_string(k) + "}");
}

std::string rule_id(RepresentationRule rule) {
  switch (rule) {
    case RepresentationRule::host_in_cube:
      return "a";
    case RepresentationRule::nonzero_bit_count:
      return "b";
    case RepresentationRule::sigma_rainbow:
      return "c";
  }
  return "?";
}

VerificationReport verify_representation(const Representation& r) {
  VerificationReport report;
  std::map<PositionSet, CubeEdge> first_with_image;
  r.host.for_each_edge([&](const CubeEdge& e) {
    if (e.dimension != r.l || r.host.dimension() != r.l) {
      report.violations.push_back({e, RepresentationRule::host_in_cube,
                                   "edge lives in Q_" + std::to_string(e.dimension) + ", not Q_" +
                                       std::to_string(r.l)});
      return;
    }
    const PositionSet support = tau(e);
    const int bits = set_size(support);
    if (bits != r.k)
      report.violations.push_back({e, RepresentationRule::nonzero_bit_count,
                                   std::to_string(bits) + " non-zero bits, expected " + std::to_string(r.k)});
    unsigned colours = 0;
    std::string clash;
    for_each_position(support, [&](int p) {
      const unsigned bit = 1u << r.sigma[p - 1];
      if ((colours & bit) != 0 && clash.empty())
        clash = "colour " + std::to_string(r.sigma[p - 1]) + " repeated at position " + std::to_string(p);
      colours |= bit;
    });
    if (!clash.empty()) {
      report.violations.push_back({e, RepresentationRule::sigma_rainbow, clash});
    } else if (bits == r.k && colours != (full_set(r.k) << 1)) {
      report.violations.push_back({e, RepresentationRule::sigma_rainbow, "colour image is not {1..k}"});
    }
    auto [it, inserted] = first_with_image.emplace(support, e);
    if (!inserted) report.collisions.push_back({it->second, e, support});
  });
  report.pass = report.violations.empty();
  return report;
}

std::vector<PositionSet> tau_images(const Representation& r) {
  std::vector<PositionSet> out;
  out.reserve(r.host.size());
  r.host.for_each_edge([&](const CubeEdge& e) { out.push_back(tau(e)); });
  return out;
}

KUniformHypergraph representation_hypergraph(const Representation& r) {
  const auto report = verify_representation(r);
  if (!report.pass)
    throw InvalidArgument("representation fails rule (" + rule_id(report.violations.front().rule) +
                          ") at " + render_edge(report.violations.front().edge));
  return KUniformHypergraph(r.l, r.k, tau_images(r));
}

std::vector<int> partite_sizes(const Representation& r) {
  std::vector<int> sizes(r.k, 0);
  for (int c : r.sigma) ++sizes[c - 1];
  return sizes;
}

AbstractGraph host_graph(const Representation& r) { return to_abstract(r.host).graph; }

std::string RepresentationSearchResult::summary() const {
  std::ostringstream os;
  if (representation)
    os << "found l=" << representation->l << " k=" << representation->k;
  else
    os << "none up to l_max=" << l_max << ", k=" << k;
  return os.str();
}

namespace {

// Backtracking colouring over the positions covered by `images`.
class RainbowColourer {
 public:
  RainbowColourer(const std::vector<PositionSet>& images, int l, int k) : images_(images), l_(l), k_(k) {
    colour_.assign(l + 1, 0);
    for (PositionSet s : images) covered_ |= s;
    touching_.resize(l + 1);
    for (std::size_t i = 0; i < images.size(); ++i)
      for_each_position(images[i], [&](int p) { touching_[p].push_back(images[i]); });
  }

  std::optional<std::vector<int>> solve() {
    for (PositionSet s : images_)
      if (set_size(s) > k_) return std::nullopt;
    if (!assign(1)) return std::nullopt;
    std::vector<int> sigma(l_);
    for (int p = 1; p <= l_; ++p) sigma[p - 1] = colour_[p] == 0 ? 1 : colour_[p];
    return sigma;
  }

 private:
  bool assign(int p) {
    if (p > l_) return true;
    if (!contains_position(covered_, p)) return assign(p + 1);
    for (int c = 1; c <= k_; ++c) {
      bool ok = true;
      for (PositionSet s : touching_[p]) {
        for_each_position(s, [&](int q) {
          if (q != p && colour_[q] == c) ok = false;
        });
        if (!ok) break;
      }
      if (!ok) continue;
      colour_[p] = c;
      if (assign(p + 1)) return true;
      colour_[p] = 0;
    }
    return false;
  }

  const std::vector<PositionSet>& images_;
  int l_;
  int k_;
  PositionSet covered_ = 0;
  std::vector<int> colour_;
  std::vector<std::vector<PositionSet>> touching_;
};

class RepresentationSearcher {
 public:
  RepresentationSearcher(const AbstractGraph& h, int k, int l, const RepresentationSearchOptions& options,
                         std::uint64_t& nodes)
      : h_(h), k_(k), l_(l), options_(options), nodes_(nodes) {
    const int n = h.vertex_count();
    std::vector<int> placed_neighbours(n, 0);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == -1 || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] && h.degree(v) > h.degree(best)))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (int w : h.neighbours(best)) ++placed_neighbours[w];
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order_[i]] = i;
    back_.resize(n);
    for (int i = 0; i < n; ++i)
      for (int w : h.neighbours(order_[i]))
        if (position[w] < i) back_[i].push_back(w);
    image_.assign(n, 0);
    used_.assign(std::size_t{1} << l, 0);
    for (PositionSet s = 0; s <= full_set(l); ++s) {
      const int sz = set_size(s);
      if (sz == k - 1 || sz == k) bilayer_.push_back(s);
      if (s == full_set(l)) break;
    }
    std::stable_sort(bilayer_.begin(), bilayer_.end(), set_less);
  }

  std::optional<std::vector<PositionSet>> run() {
    if (order_.empty()) return std::vector<PositionSet>{};
    const PositionSet low = full_set(k_ - 1);
    const PositionSet high = full_set(k_);
    // order_[1] is a neighbour of order_[0]: the pattern has no isolated
    // vertices and placement prefers vertices with placed neighbours.
    for (auto [a, b] : {std::pair{low, high}, std::pair{high, low}}) {
      place(order_[0], a);
      const bool found = try_place(1, b);
      unplace(order_[0], a);
      if (found) return result_;
    }
    return std::nullopt;
  }

  std::uint64_t embeddings() const { return embeddings_; }

 private:
  // Places order_[depth] on c (if admissible and the tau-images stay
  // colourable) and recurses; undoes everything before returning.
  bool try_place(std::size_t depth, PositionSet c) {
    if (!admissible(depth, c)) return false;
    const int v = order_[depth];
    place(v, c);
    bool added = false;
    for (int w : back_[depth])
      if (++tau_count_[c | image_[w]] == 1) added = true;
    const bool feasible = !added || rainbow_colouring(distinct_images(), l_, k_).has_value();
    const bool found = feasible && extend(depth + 1);
    for (int w : back_[depth]) {
      const PositionSet t = c | image_[w];
      if (--tau_count_[t] == 0) tau_count_.erase(t);
    }
    unplace(v, c);
    return found;
  }

  int bilayer_degree(PositionSet s) const { return set_size(s) == k_ ? k_ : l_ - k_ + 1; }

  bool admissible(std::size_t depth, PositionSet c) const {
    const int v = order_[depth];
    if (used_[c] || bilayer_degree(c) < h_.degree(v)) return false;
    for (int w : back_[depth])
      if (set_size(c ^ image_[w]) != 1) return false;
    return true;
  }

  void place(int v, PositionSet c) {
    image_[v] = c;
    used_[c] = 1;
  }
  void unplace(int v, PositionSet c) {
    used_[c] = 0;
    image_[v] = 0;
  }

  bool extend(std::size_t depth) {
    if (++nodes_ > options_.node_limit && options_.node_limit != 0)
      throw CapExceeded("representation search nodes", static_cast<std::int64_t>(options_.node_limit),
                        static_cast<std::int64_t>(nodes_));
    if (depth == order_.size()) {
      ++embeddings_;
      std::vector<PositionSet> images = distinct_images();
      if (rainbow_colouring(images, l_, k_)) {
        result_.assign(image_.begin(), image_.end());
        return true;
      }
      return false;
    }
    std::vector<PositionSet> candidates;
    if (!back_[depth].empty()) {
      const PositionSet x = image_[back_[depth][0]];
      if (set_size(x) == k_ - 1) {
        for (int p = 1; p <= l_; ++p)
          if (!contains_position(x, p)) candidates.push_back(x | position_bit(p));
      } else {
        for_each_position(x, [&](int p) { candidates.push_back(x & ~position_bit(p)); });
      }
      std::sort(candidates.begin(), candidates.end(), set_less);
    } else {
      candidates = bilayer_;
    }
    for (PositionSet c : candidates)
      if (try_place(depth, c)) return true;
    return false;
  }

  std::vector<PositionSet> distinct_images() const {
    std::vector<PositionSet> out;
    out.reserve(tau_count_.size());
    for (const auto& [t, count] : tau_count_) out.push_back(t);
    return out;
  }

  const AbstractGraph& h_;
  int k_;
  int l_;
  RepresentationSearchOptions options_;
  std::uint64_t& nodes_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::vector<PositionSet> image_;
  std::vector<char> used_;
  std::vector<PositionSet> bilayer_;
  std::map<PositionSet, int> tau_count_;
  std::vector<PositionSet> result_;
  std::uint64_t embeddings_ = 0;
};

}  // namespace

std::optional<std::vector<int>> rainbow_colouring(const std::vector<PositionSet>& images, int l, int k) {
  RainbowColourer c(images, l, k);
  return c.solve();
}

RepresentationSearchResult search_representation(const AbstractGraph& h, int k, int l_max,
                                                 const RepresentationSearchOptions& options) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (l_max > options.max_host_dimension) throw CapExceeded("host dimension l_max", options.max_host_dimension, l_max);
  if (l_max > 20) throw CapExceeded("host dimension l_max", 20, l_max);
  if (h.vertex_count() > options.max_pattern_vertices)
    throw CapExceeded("pattern vertices", options.max_pattern_vertices, h.vertex_count());

  RepresentationSearchResult result;
  result.k = k;
  result.l_max = l_max;
  const AbstractGraph core = h.without_isolated();
  if (core.edge_count() == 0) {
    if (l_max >= 1) {
      const int l = std::max(1, k);
      if (l <= l_max) result.representation = Representation(l, k, CubeSubgraph(l, {}), std::vector<int>(l, 1));
    }
    return result;
  }
  if (!core.is_bipartite()) return result;

  for (int l = std::max(k, 1); l <= l_max; ++l) {
    RepresentationSearcher searcher(core, k, l, options, result.nodes);
    auto images = searcher.run();
    result.embeddings += searcher.embeddings();
    if (!images) continue;
    std::vector<CubeEdge> edges;
    std::vector<PositionSet> taus;
    for (const auto& [u, v] : core.edges()) {
      const CubeVertex a{l, (*images)[u]};
      const CubeVertex b{l, (*images)[v]};
      const CubeEdge e = a.level() < b.level() ? edge_between(a, b) : edge_between(b, a);
      edges.push_back(e);
      taus.push_back(tau(e));
    }
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    auto sigma = rainbow_colouring(taus, l, k);
    Representation r(l, k, CubeSubgraph(l, std::move(edges)), std::move(*sigma));
    if (!verify_representation(r).pass) throw Error("internal: search produced an invalid representation");
    result.representation = std::move(r);
    return result;
  }
  return result;
}

}  // namespace cuberep

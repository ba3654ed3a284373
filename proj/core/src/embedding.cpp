#include "cuberep/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cuberep/counting.hpp"
#include "cuberep/generators.hpp"

namespace cuberep {

std::uint64_t level_capacity(int n, int j) {
  if (j < 0 || j >= n) return 0;
  return static_cast<std::uint64_t>(n - j) * binomial(n, j).convert_to<std::uint64_t>();
}

bool in_middle_band(int n, int j) { return 4 * j >= n && 4 * j < 3 * n; }

LevelProfile level_profile(const CubeSubgraph& g) {
  LevelProfile p;
  p.n = g.dimension();
  p.counts.assign(p.n, 0);
  p.densities.assign(p.n, 0.0);
  if (g.is_lazy()) {
    for (int j = 0; j < p.n; ++j) p.counts[j] = level_capacity(p.n, j);
  } else {
    g.for_each_edge([&](const CubeEdge& e) { ++p.counts[e.level()]; });
  }
  std::uint64_t band_edges = 0;
  std::uint64_t band_capacity = 0;
  for (int j = 0; j < p.n; ++j) {
    const std::uint64_t cap = level_capacity(p.n, j);
    p.densities[j] = cap == 0 ? 0.0 : static_cast<double>(p.counts[j]) / static_cast<double>(cap);
    p.total += p.counts[j];
    if (in_middle_band(p.n, j)) {
      band_edges += p.counts[j];
      band_capacity += cap;
    }
  }
  p.middle_density = band_capacity == 0 ? 0.0 : static_cast<double>(band_edges) / static_cast<double>(band_capacity);
  return p;
}

namespace {

bool admissible(const LevelProfile& p, const LevelConstraint& c, int j) {
  return j >= c.min_level && j <= c.max_level && j >= 0 && j < p.n && p.counts[j] > 0;
}

}  // namespace

std::vector<int> ranked_levels(const LevelProfile& profile, const LevelConstraint& constraint) {
  std::vector<int> levels;
  for (int j = 0; j < profile.n; ++j)
    if (admissible(profile, constraint, j)) levels.push_back(j);
  std::stable_sort(levels.begin(), levels.end(),
                   [&](int a, int b) { return profile.densities[a] > profile.densities[b]; });
  return levels;
}

LevelChoice select_level(const LevelProfile& profile, const LevelConstraint& constraint) {
  LevelChoice choice;
  for (int j = 0; j < profile.n; ++j) {
    if (!in_middle_band(profile.n, j) || !admissible(profile, constraint, j)) continue;
    if (choice.level == -1 || profile.densities[j] > profile.densities[choice.level]) choice.level = j;
  }
  if (choice.level != -1) return choice;
  const auto all = ranked_levels(profile, constraint);
  if (all.empty()) throw InvalidArgument("no admissible level has an edge");
  choice.level = all.front();
  choice.outside_middle_band = true;
  return choice;
}

FlipTable::FlipTable(int n, int level, std::vector<FlipEntry> entries)
    : n_(n), level_(level), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const FlipEntry& a, const FlipEntry& b) { return set_less(a.set, b.set); });
}

PositionSet FlipTable::flips(PositionSet j_set) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), j_set,
                             [](const FlipEntry& e, PositionSet s) { return set_less(e.set, s); });
  return it != entries_.end() && it->set == j_set ? it->flips : 0;
}

std::uint64_t FlipTable::flip_count() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += set_size(e.flips);
  return total;
}

std::uint64_t FlipTable::pair_count(int k) const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += binomial(set_size(e.flips), k).convert_to<std::uint64_t>();
  return total;
}

FlipTable build_flip_table(const CubeSubgraph& g, int j) {
  if (j < 0 || j >= g.dimension())
    throw InvalidArgument("level " + std::to_string(j) + " outside 0.." + std::to_string(g.dimension() - 1));
  std::unordered_map<PositionSet, PositionSet> d;
  g.for_each_edge_at_level(j, [&](const CubeEdge& e) { d[e.support()] |= position_bit(e.flip); });
  std::vector<FlipEntry> entries;
  entries.reserve(d.size());
  for (const auto& [set, flips] : d) entries.push_back({set, flips});
  return FlipTable(g.dimension(), j, std::move(entries));
}

AnchorRanking rank_anchors(const FlipTable& table, int k, const AnchorOptions& options) {
  if (k < 1 || k > table.level() + 1)
    throw InvalidArgument("anchor selection needs 1 <= k <= j+1 (k=" + std::to_string(k) +
                          ", j=" + std::to_string(table.level()) + ")");
  AnchorRanking ranking;
  ranking.total_pairs = table.pair_count(k);
  if (ranking.total_pairs == 0) throw InvalidArgument("no set J has d(J) >= k");
  ranking.heuristic = ranking.total_pairs > options.pair_cap;
  const double keep = ranking.heuristic
                          ? static_cast<double>(options.pair_cap) / static_cast<double>(ranking.total_pairs)
                          : 1.0;
  std::unordered_map<PositionSet, std::uint64_t> buckets;
  std::uint64_t index = 0;
  for (const auto& entry : table.entries()) {
    const std::uint64_t i = index++;
    if (set_size(entry.flips) < k) continue;
    if (ranking.heuristic && counter_uniform(options.sample_seed, i) >= keep) continue;
    for_each_subset_of_size(entry.flips, k, [&](PositionSet chosen) { ++buckets[entry.set & ~chosen]; });
  }
  ranking.buckets.reserve(buckets.size());
  for (const auto& [anchor, pairs] : buckets) ranking.buckets.push_back({anchor, pairs});
  std::sort(ranking.buckets.begin(), ranking.buckets.end(), [](const AnchorBucket& a, const AnchorBucket& b) {
    if (a.pairs != b.pairs) return a.pairs > b.pairs;
    return set_less(a.anchor, b.anchor);
  });
  return ranking;
}

KUniformHypergraph anchor_hypergraph(const FlipTable& table, PositionSet anchor, int k) {
  std::vector<PositionSet> edges;
  for (const auto& entry : table.entries()) {
    if ((entry.set & anchor) != anchor) continue;
    const PositionSet chosen = entry.set & ~anchor;
    if (set_size(chosen) == k && (chosen & ~entry.flips) == 0) edges.push_back(chosen);
  }
  return KUniformHypergraph(table.dimension(), k, std::move(edges));
}

AnchorResult select_anchor(const FlipTable& table, int k, const AnchorOptions& options) {
  const AnchorRanking ranking = rank_anchors(table, k, options);
  AnchorResult result;
  result.anchor = ranking.buckets.front().anchor;
  result.hypergraph = anchor_hypergraph(table, result.anchor, k);
  result.bucket_pairs = result.hypergraph.edge_count();
  result.total_pairs = ranking.total_pairs;
  result.heuristic = ranking.heuristic;
  return result;
}

CubeVertex lift_vertex(const CubeVertex& a, PositionSet anchor, const std::vector<int>& g, int n) {
  return CubeVertex{n, anchor | map_set(a.bits, g)};
}

CubeEdge lift_edge(const CubeEdge& e, PositionSet anchor, const std::vector<int>& g, int n) {
  return CubeEdge{n, anchor | map_set(e.ones, g), g[e.flip - 1]};
}

namespace {

std::string check_map(int l, int n, PositionSet anchor, const std::vector<int>& g) {
  if (static_cast<int>(g.size()) != l) return "g has " + std::to_string(g.size()) + " entries, expected " + std::to_string(l);
  if ((anchor & ~full_set(n)) != 0) return "anchor leaves {1.." + std::to_string(n) + "}";
  PositionSet seen = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int x = g[i];
    if (x < 1 || x > n) return "g(" + std::to_string(i + 1) + ") outside {1.." + std::to_string(n) + "}";
    if (contains_position(seen, x)) return "g is not injective at " + std::to_string(x);
    if (contains_position(anchor, x)) return "g(" + std::to_string(i + 1) + ") lies in the anchor";
    seen |= position_bit(x);
  }
  return {};
}

}  // namespace

CubeCopyCertificate lift_embedding(const Representation& r, PositionSet anchor, const std::vector<int>& g,
                                   const CubeSubgraph& g_host) {
  const int n = g_host.dimension();
  if (auto why = check_map(r.l, n, anchor, g); !why.empty()) throw InvalidArgument("lift: " + why);
  std::vector<CubeEdge> lifted;
  lifted.reserve(r.host.size());
  r.host.for_each_edge([&](const CubeEdge& e) {
    const CubeEdge image = lift_edge(e, anchor, g, n);
    if (!g_host.contains(image)) throw LiftError(image);
    lifted.push_back(image);
  });
  return CubeCopyCertificate{r, anchor, g, CubeSubgraph(n, std::move(lifted))};
}

CertificateCheck verify_certificate(const CubeCopyCertificate& cert, const CubeSubgraph& g) {
  const int n = g.dimension();
  if (cert.edges.dimension() != n) return {false, "certificate dimension differs from G"};
  if (auto why = check_map(cert.representation.l, n, cert.anchor, cert.g); !why.empty()) return {false, why};
  std::vector<CubeEdge> expected;
  cert.representation.host.for_each_edge(
      [&](const CubeEdge& e) { expected.push_back(lift_edge(e, cert.anchor, cert.g, n)); });
  if (!(CubeSubgraph(n, std::move(expected)) == cert.edges)) return {false, "edge list is not the lift of the host"};
  std::string missing;
  cert.edges.for_each_edge([&](const CubeEdge& e) {
    if (missing.empty() && !g.contains(e)) missing = render_edge(e);
  });
  if (!missing.empty()) return {false, "edge " + missing + " not in G"};
  if (!are_isomorphic(to_abstract(cert.edges).graph, host_graph(cert.representation)))
    return {false, "image is not isomorphic to the host"};
  return {true, {}};
}

std::string outcome_name(FindCopyOutcome outcome) {
  switch (outcome) {
    case FindCopyOutcome::found:
      return "found";
    case FindCopyOutcome::exhausted:
      return "exhausted";
    case FindCopyOutcome::preconditions_unmet:
      return "preconditions_unmet";
  }
  return "?";
}

FindCopyResult find_copy(const CubeSubgraph& g, const Representation& r, const FindCopyOptions& options) {
  const auto report = verify_representation(r);
  if (!report.pass) throw InvalidArgument("find_copy needs a verified representation");
  FindCopyResult result;
  const int n = g.dimension();
  const int k = r.k;
  if (r.l > n) {
    result.outcome = FindCopyOutcome::preconditions_unmet;
    result.reason = "representation dimension l=" + std::to_string(r.l) + " exceeds n=" + std::to_string(n);
    return result;
  }
  const KUniformHypergraph pattern = representation_hypergraph(r);
  if (pattern.edge_count() == 0) {
    std::vector<int> identity(r.l);
    std::iota(identity.begin(), identity.end(), 1);
    result.certificate = lift_embedding(r, 0, identity, g);
    result.outcome = FindCopyOutcome::found;
    return result;
  }

  const LevelProfile profile = level_profile(g);
  // |S| = j+1-k must leave room for the l host coordinates.
  const LevelConstraint constraint{k - 1, n - r.l + k - 1};
  std::vector<int> levels = ranked_levels(profile, constraint);
  if (levels.empty()) {
    result.outcome = FindCopyOutcome::preconditions_unmet;
    result.reason = "no level in [" + std::to_string(constraint.min_level) + ", " +
                    std::to_string(constraint.max_level) + "] has an edge";
    return result;
  }
  if (!options.exhaustive) {
    const LevelChoice choice = select_level(profile, constraint);
    levels = {choice.level};
    result.outside_middle_band = choice.outside_middle_band;
  }

  bool any_stage_ran = false;
  for (int j : levels) {
    const FlipTable table = build_flip_table(g, j);
    if (table.pair_count(k) == 0) {
      if (result.reason.empty()) result.reason = "no J at level " + std::to_string(j) + " has d(J) >= k";
      continue;
    }
    any_stage_ran = true;
    const AnchorRanking ranking = rank_anchors(table, k, options.anchor);
    result.heuristic = result.heuristic || ranking.heuristic;
    for (const auto& bucket : ranking.buckets) {
      if (!ranking.heuristic && bucket.pairs < pattern.edge_count()) break;
      if (options.max_attempts != 0 && result.attempts >= options.max_attempts) {
        result.reason = "attempt limit reached";
        result.outcome = FindCopyOutcome::exhausted;
        return result;
      }
      ++result.attempts;
      const KUniformHypergraph host = anchor_hypergraph(table, bucket.anchor, k);
      HypergraphEmbedOptions embed = options.embed;
      embed.excluded |= bucket.anchor;
      if (auto emb = embed_hypergraph(pattern, host, embed)) {
        CubeCopyCertificate cert = lift_embedding(r, bucket.anchor, *emb, g);
        const CertificateCheck check = verify_certificate(cert, g);
        if (!check.ok) throw Error("internal: pipeline certificate failed verification: " + check.reason);
        result.outcome = FindCopyOutcome::found;
        result.certificate = std::move(cert);
        result.level = j;
        result.reason.clear();
        return result;
      }
      if (!options.exhaustive) break;
    }
  }
  result.outcome = any_stage_ran ? FindCopyOutcome::exhausted : FindCopyOutcome::preconditions_unmet;
  if (result.outcome == FindCopyOutcome::exhausted)
    result.reason = options.exhaustive ? "no level/anchor admits an embedding" : "best level/anchor admits no embedding";
  result.level = options.exhaustive ? -1 : levels.front();
  return result;
}

}  // namespace cuberep

#pragma once

// The constructive route from a dense cube subgraph G to a copy of H:
//   1. choose a level j where G is dense (level_profile, select_level);
//   2. for every (j+1)-set J record D(J), the positions of J whose
//      replacement by a flip-bit gives an edge of G (build_flip_table);
//   3. bucket the pairs (I, J) with I ⊆ D(J), |I| = k by S = J \ I and keep
//      the fullest bucket; its I-sets form the k-graph 𝓘 (select_anchor);
//   4. embed the representation hypergraph into 𝓘 (embed_hypergraph);
//   5. lift through f(a) = S ∪ g(a) (lift_embedding).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuberep/cube.hpp"
#include "cuberep/error.hpp"
#include "cuberep/hypergraph.hpp"
#include "cuberep/representation.hpp"

namespace cuberep {

struct LevelProfile {
  int n = 0;
  /// counts[j] = edges of G between levels j and j+1.
  std::vector<std::uint64_t> counts;
  /// counts[j] / ((n-j) C(n,j)).
  std::vector<double> densities;
  /// Aggregate density over levels j with n/4 <= j < 3n/4.
  double middle_density = 0.0;
  std::uint64_t total = 0;
};

/// (n - j) * C(n, j): the number of Q_n edges at level j.
std::uint64_t level_capacity(int n, int j);

/// n/4 <= j < 3n/4.
bool in_middle_band(int n, int j);

LevelProfile level_profile(const CubeSubgraph& g);

/// Levels outside [min_level, max_level] are never chosen.
struct LevelConstraint {
  int min_level = 0;
  int max_level = 1 << 30;
};

struct LevelChoice {
  int level = -1;
  /// The middle band held no admissible edges, so the densest level
  /// overall was taken instead.
  bool outside_middle_band = false;
};

/// Densest admissible level in the middle band (ties: smallest j); falls
/// back to the densest admissible level anywhere. Throws InvalidArgument if
/// no admissible level has an edge.
LevelChoice select_level(const LevelProfile& profile, const LevelConstraint& constraint = {});

/// Admissible levels with at least one edge, by decreasing density (ties:
/// smallest j). Used for retries.
std::vector<int> ranked_levels(const LevelProfile& profile, const LevelConstraint& constraint = {});

struct FlipEntry {
  PositionSet set = 0;   // J
  PositionSet flips = 0; // D(J)
};

class FlipTable {
 public:
  FlipTable() = default;
  FlipTable(int n, int level, std::vector<FlipEntry> entries);

  int dimension() const { return n_; }
  int level() const { return level_; }
  /// Only sets J with d(J) >= 1, sorted by J.
  const std::vector<FlipEntry>& entries() const { return entries_; }
  /// D(J), or 0 if J has no entry.
  PositionSet flips(PositionSet j_set) const;
  /// Σ_J d(J).
  std::uint64_t flip_count() const;
  /// Σ_J C(d(J), k).
  std::uint64_t pair_count(int k) const;

 private:
  int n_ = 0;
  int level_ = 0;
  std::vector<FlipEntry> entries_;
};

/// Built from G's level-j edges (never from all (j+1)-subsets).
FlipTable build_flip_table(const CubeSubgraph& g, int j);

struct AnchorOptions {
  /// Above this many (I, J) pairs the buckets are estimated from a seeded
  /// sample of the J-sets and the result is flagged heuristic.
  std::uint64_t pair_cap = 10'000'000;
  std::uint64_t sample_seed = 0;
};

struct AnchorBucket {
  PositionSet anchor = 0;
  std::uint64_t pairs = 0;
};

struct AnchorRanking {
  /// Decreasing pair count, ties by lexicographically least anchor.
  std::vector<AnchorBucket> buckets;
  std::uint64_t total_pairs = 0;
  bool heuristic = false;
};

struct AnchorResult {
  PositionSet anchor = 0;
  /// Edges I with I ∩ S = ∅ and I ⊆ D(I ∪ S), on ground set {1..n}.
  KUniformHypergraph hypergraph;
  std::uint64_t bucket_pairs = 0;
  std::uint64_t total_pairs = 0;
  bool heuristic = false;
};

/// Throws InvalidArgument when k > j+1 or no J has d(J) >= k.
AnchorRanking rank_anchors(const FlipTable& table, int k, const AnchorOptions& options = {});

/// The I-sets of the bucket for anchor S.
KUniformHypergraph anchor_hypergraph(const FlipTable& table, PositionSet anchor, int k);

/// The fullest bucket.
AnchorResult select_anchor(const FlipTable& table, int k, const AnchorOptions& options = {});

struct CubeCopyCertificate {
  Representation representation;
  PositionSet anchor = 0;
  /// g[i-1] = image in {1..n} of host coordinate i.
  std::vector<int> g;
  /// The lifted copy of the host inside G, of dimension n.
  CubeSubgraph edges;
};

/// An image edge of the lift is missing from G.
class LiftError : public Error {
 public:
  explicit LiftError(const CubeEdge& missing)
      : Error("lifted edge " + render_edge(missing) + " is not in G"), missing_(missing) {}
  const CubeEdge& missing() const noexcept { return missing_; }

 private:
  CubeEdge missing_;
};

/// f(a) = S ∪ {g(i) : a_i = 1} for a vertex a of Q_l.
CubeVertex lift_vertex(const CubeVertex& a, PositionSet anchor, const std::vector<int>& g, int n);
CubeEdge lift_edge(const CubeEdge& e, PositionSet anchor, const std::vector<int>& g, int n);

/// Maps every host edge through f and checks it against G. Throws
/// InvalidArgument if g is not injective or meets S, LiftError on a
/// missing edge.
CubeCopyCertificate lift_embedding(const Representation& r, PositionSet anchor, const std::vector<int>& g,
                                   const CubeSubgraph& g_host);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Independent of the pipeline: g injective and disjoint from S, the edge
/// list equals the lift of the host, every edge is in G, and the edge list
/// is abstract-isomorphic to the host.
CertificateCheck verify_certificate(const CubeCopyCertificate& cert, const CubeSubgraph& g);

enum class FindCopyOutcome { found, exhausted, preconditions_unmet };

std::string outcome_name(FindCopyOutcome outcome);

struct FindCopyOptions {
  /// Retry over all admissible levels (by density) and all buckets (by
  /// size) before giving up.
  bool exhaustive = false;
  AnchorOptions anchor;
  HypergraphEmbedOptions embed;
  /// 0 = unlimited number of (level, anchor) attempts in exhaustive mode.
  std::uint64_t max_attempts = 0;
};

struct FindCopyResult {
  FindCopyOutcome outcome = FindCopyOutcome::exhausted;
  std::optional<CubeCopyCertificate> certificate;
  std::string reason;
  int level = -1;
  bool outside_middle_band = false;
  bool heuristic = false;
  std::uint64_t attempts = 0;
};

/// Runs the pipeline. Requires a verified representation (throws
/// InvalidArgument otherwise). Any certificate returned has passed
/// verify_certificate.
FindCopyResult find_copy(const CubeSubgraph& g, const Representation& r, const FindCopyOptions& options = {});

}  // namespace cuberep

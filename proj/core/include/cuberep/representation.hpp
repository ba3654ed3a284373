#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuberep/cube.hpp"
#include "cuberep/graph.hpp"
#include "cuberep/hypergraph.hpp"

namespace cuberep {

/// A cube subgraph H placed in Q_l together with a colouring
/// sigma: {1..l} -> {1..k}. It is a k-partite representation when every
/// host edge has exactly k non-zero bits and sigma is a bijection from those
/// bits onto {1..k}; see verify_representation().
struct Representation {
  int l = 0;
  int k = 0;
  CubeSubgraph host;
  /// sigma[p-1] is the colour of position p.
  std::vector<int> sigma;

  Representation() = default;
  /// Structural checks only (sizes and value ranges); throws InvalidArgument.
  Representation(int l, int k, CubeSubgraph host, std::vector<int> sigma);

  friend bool operator==(const Representation&, const Representation&) = default;
};

enum class RepresentationRule {
  host_in_cube,      // host is a subgraph of Q_l
  nonzero_bit_count, // exactly k non-zero bits per edge
  sigma_rainbow,     // sigma injective on the non-zero bits, image {1..k}
};

/// "a", "b", "c" for the three defining conditions.
std::string rule_id(RepresentationRule rule);

struct Violation {
  CubeEdge edge;
  RepresentationRule rule;
  std::string detail;
};

/// Two host edges with the same tau-image. Permitted, but reported.
struct TauCollision {
  CubeEdge first;
  CubeEdge second;
  PositionSet image = 0;
};

struct VerificationReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<TauCollision> collisions;
};

/// ones ∪ {flip}.
inline PositionSet tau(const CubeEdge& e) { return e.support(); }

VerificationReport verify_representation(const Representation& r);

/// tau of every host edge, in canonical host order, with repetitions.
std::vector<PositionSet> tau_images(const Representation& r);

/// {tau(e) : e in host} on vertex set {1..l}. Throws InvalidArgument if the
/// representation does not verify.
KUniformHypergraph representation_hypergraph(const Representation& r);

/// (|sigma^-1(1)|, ..., |sigma^-1(k)|).
std::vector<int> partite_sizes(const Representation& r);

/// The host as an abstract graph (isolated cube vertices dropped).
AbstractGraph host_graph(const Representation& r);

struct RepresentationSearchOptions {
  int max_pattern_vertices = 20;
  int max_host_dimension = 8;
  /// 0 = unlimited; exceeding throws CapExceeded.
  std::uint64_t node_limit = 0;
};

struct RepresentationSearchResult {
  std::optional<Representation> representation;
  int k = 0;
  int l_max = 0;
  std::uint64_t nodes = 0;
  std::uint64_t embeddings = 0;

  bool found() const { return representation.has_value(); }
  /// Either "found l=<l> k=<k>" or "none up to l_max=<l_max>, k=<k>".
  std::string summary() const;
};

/// Exhaustive search for a k-partite representation of H in Q_l for
/// k <= l <= l_max. Every host edge must run between levels k-1 and k, so
/// the search embeds H into that bilayer. The image of the first pattern
/// edge is fixed to ({1..k-1}, {1..k}) in either orientation, which removes
/// the coordinate-permutation symmetry acting on it; the partial tau-images
/// are kept k-colourable at every step. Isolated vertices of H are ignored.
/// The first witness in search order is returned.
RepresentationSearchResult search_representation(const AbstractGraph& h, int k, int l_max,
                                                 const RepresentationSearchOptions& options = {});

/// Lexicographically least sigma making every set in `images` rainbow, with
/// positions not covered by any image set to 1. nullopt if none exists.
std::optional<std::vector<int>> rainbow_colouring(const std::vector<PositionSet>& images, int l, int k);

}  // namespace cuberep

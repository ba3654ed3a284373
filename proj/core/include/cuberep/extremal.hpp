#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cuberep/cube.hpp"
#include "cuberep/graph.hpp"
#include "cuberep/hypergraph.hpp"
#include "cuberep/representation.hpp"

namespace cuberep {

enum class ExtremalStatus { exact, lower_bound };

/// "exact" or "lower".
std::string status_name(ExtremalStatus status);

struct ExtremalOptions {
  /// With neither budget set the search runs to completion (exact mode).
  std::optional<double> time_budget_seconds;
  std::optional<std::uint64_t> node_budget;
  /// Workers share the best value; the reported value and witness do not
  /// depend on this.
  int threads = 1;
  int max_exact_dimension = 6;
  int max_budget_dimension = 8;
  int max_exact_vertices_k2 = 10;
  int max_exact_vertices_k3 = 7;
  std::size_t max_ground = 1024;
  std::size_t max_copies = 2'000'000;

  bool exact_mode() const { return !time_budget_seconds && !node_budget; }
};

struct CubeExtremalResult {
  std::uint64_t value = 0;
  CubeSubgraph witness;
  ExtremalStatus status = ExtremalStatus::exact;
  std::uint64_t nodes = 0;
  std::size_t copies = 0;
};

struct HypergraphExtremalResult {
  std::uint64_t value = 0;
  KUniformHypergraph witness;
  ExtremalStatus status = ExtremalStatus::exact;
  std::uint64_t nodes = 0;
  std::size_t copies = 0;
};

/// ex(Q_n, H) by branch and bound over the edges of Q_n in canonical order
/// (include before exclude). Every copy of H in Q_n is listed up front; a
/// node may include an edge only if that completes no copy. The bound is
/// current + undecided − (a greedy packing of edge-disjoint copies that are
/// still completable). Among maximum solutions the first in search order is
/// returned. Edgeless H forbids nothing.
CubeExtremalResult ex_cube(int n, const AbstractGraph& h, const ExtremalOptions& options = {});

/// ex(K_m^(k), pattern), same search over the k-subsets of {1..m}.
HypergraphExtremalResult ex_hypergraph(int m, const KUniformHypergraph& pattern,
                                       const ExtremalOptions& options = {});

using Rational = boost::rational<std::int64_t>;

struct CorollaryExponent {
  /// Partite sizes ascending; the last (largest) is left out of the product.
  std::vector<int> sorted_sizes;
  Rational delta;
  /// 1 − delta / k.
  Rational exponent;
};

CorollaryExponent corollary_exponent(std::vector<int> sizes);
CorollaryExponent corollary_exponent(const Representation& r);

struct ErdosRow {
  int m = 0;
  std::uint64_t value = 0;
  ExtremalStatus status = ExtremalStatus::exact;
  /// m^(k − delta) and value / scale.
  double scale = 0.0;
  double ratio = 0.0;
};

struct ErdosReport {
  int k = 0;
  std::vector<int> sizes;
  Rational delta;
  std::vector<ErdosRow> rows;
};

/// ex(K_m^(k), K_k^(k)(s_1,...,s_k)) for m in [m_min, m_max] with the ratio
/// to m^(k − delta). Values only; no trend claim.
ErdosReport erdos_bound_check(const std::vector<int>& sizes, int m_min, int m_max,
                              const ExtremalOptions& options = {});

}  // namespace cuberep

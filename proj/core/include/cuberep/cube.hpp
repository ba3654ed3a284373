#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuberep/bits.hpp"

namespace cuberep {

/// Default cap on the cube dimension n.
inline constexpr int kDefaultMaxDimension = 24;

/// Above this dimension full_cube() returns a complete subgraph that
/// generates its edges on demand instead of storing them.
inline constexpr int kMaterializeLimit = 16;

/// A vertex of Q_n: the positions in {1..n} holding a 1.
struct CubeVertex {
  int dimension = 0;
  PositionSet bits = 0;

  int level() const { return set_size(bits); }
  friend bool operator==(const CubeVertex&, const CubeVertex&) = default;
};

/// "[01011]".
std::string render_vertex(const CubeVertex& v);

/// An edge of Q_n written as its ones plus the flip-bit: [01*11] has
/// ones = {2,4,5} and flip = 3.
struct CubeEdge {
  int dimension = 0;
  PositionSet ones = 0;
  int flip = 0;

  /// Validated constructor; throws InvalidArgument if flip lies in ones or
  /// any position falls outside {1..dimension}.
  static CubeEdge make(int dimension, PositionSet ones, int flip);

  /// Lower endpoint (flip-bit 0) first.
  std::pair<CubeVertex, CubeVertex> endpoints() const;

  /// The edge joins level `level()` to level `level() + 1`.
  int level() const { return set_size(ones); }

  /// Positions of the non-zero bits: ones plus the flip-bit.
  PositionSet support() const { return ones | position_bit(flip); }

  friend bool operator==(const CubeEdge&, const CubeEdge&) = default;
};

/// Canonical order: ones as a sorted list (lexicographic), then flip.
std::strong_ordering canonical_compare(const CubeEdge& a, const CubeEdge& b);

struct CanonicalLess {
  bool operator()(const CubeEdge& a, const CubeEdge& b) const {
    return canonical_compare(a, b) < 0;
  }
};

/// Parses "[01*11]" (brackets optional). Throws ParseError.
CubeEdge parse_edge(std::string_view text);

/// Always bracketed: render_edge(parse_edge("[01*11]")) == "[01*11]".
std::string render_edge(const CubeEdge& e);

/// The edge between two adjacent vertices; throws if they are not adjacent.
CubeEdge edge_between(const CubeVertex& a, const CubeVertex& b);

/// A set of edges of Q_n, held in canonical order without duplicates.
/// Instances are immutable. A complete subgraph of dimension above
/// kMaterializeLimit stores no edge list and enumerates on demand.
class CubeSubgraph {
 public:
  CubeSubgraph() = default;
  CubeSubgraph(int dimension, std::vector<CubeEdge> edges);

  /// Q_n itself; lazy above kMaterializeLimit.
  static CubeSubgraph full(int n, int max_dimension = kDefaultMaxDimension);

  int dimension() const { return dimension_; }
  std::uint64_t size() const;
  bool empty() const { return size() == 0; }
  bool is_complete() const { return size() == full_edge_count(dimension_); }
  bool is_lazy() const { return lazy_full_; }

  bool contains(const CubeEdge& e) const;

  /// Visits edges in canonical order.
  template <typename F>
  void for_each_edge(F&& f) const {
    if (!lazy_full_) {
      for (const auto& e : edges_) f(e);
      return;
    }
    for_each_full_edge(dimension_, f);
  }

  /// Visits the edges whose lower endpoint sits at level j.
  template <typename F>
  void for_each_edge_at_level(int j, F&& f) const {
    for_each_edge([&](const CubeEdge& e) {
      if (e.level() == j) f(e);
    });
  }

  /// Materialized edge list (copies for lazy graphs).
  std::vector<CubeEdge> edges() const;

  /// Same graph with the given edge removed (no-op if absent).
  CubeSubgraph without(const CubeEdge& e) const;

  static std::uint64_t full_edge_count(int n);

  friend bool operator==(const CubeSubgraph& a, const CubeSubgraph& b);

 private:
  template <typename F>
  static void for_each_full_edge(int n, F& f) {
    // Preorder over ones-sets in lexicographic order of their sorted lists.
    std::vector<int> stack;
    PositionSet ones = 0;
    auto emit = [&](PositionSet o) {
      for (int p = 1; p <= n; ++p)
        if (!contains_position(o, p)) f(CubeEdge{n, o, p});
    };
    emit(0);
    int next = 1;
    while (true) {
      if (next <= n) {
        ones |= position_bit(next);
        stack.push_back(next);
        emit(ones);
        ++next;
      } else {
        if (stack.empty()) break;
        const int last = stack.back();
        stack.pop_back();
        ones &= ~position_bit(last);
        next = last + 1;
      }
    }
  }

  int dimension_ = 0;
  bool lazy_full_ = false;
  std::vector<CubeEdge> edges_;
};

/// Q_n with n ≤ max_dimension. Throws CapExceeded above the cap.
CubeSubgraph full_cube(int n, int max_dimension = kDefaultMaxDimension);

}  // namespace cuberep

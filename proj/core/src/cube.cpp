#include "cuberep/cube.hpp"

#include <algorithm>

#include "cuberep/error.hpp"

namespace cuberep {

std::string render_vertex(const CubeVertex& v) {
  std::string s = "[";
  for (int p = 1; p <= v.dimension; ++p) s += contains_position(v.bits, p) ? '1' : '0';
  s += ']';
  return s;
}

CubeEdge CubeEdge::make(int dimension, PositionSet ones, int flip) {
  if (dimension < 1 || dimension > kMaxPositions)
    throw InvalidArgument("edge dimension out of range: " + std::to_string(dimension));
  if (flip < 1 || flip > dimension)
    throw InvalidArgument("flip-bit " + std::to_string(flip) + " outside {1.." +
                          std::to_string(dimension) + "}");
  if ((ones & ~full_set(dimension)) != 0)
    throw InvalidArgument("ones " + render_set(ones) + " outside {1.." +
                          std::to_string(dimension) + "}");
  if (contains_position(ones, flip))
    throw InvalidArgument("flip-bit " + std::to_string(flip) + " also marked as a one");
  return CubeEdge{dimension, ones, flip};
}

std::pair<CubeVertex, CubeVertex> CubeEdge::endpoints() const {
  return {CubeVertex{dimension, ones}, CubeVertex{dimension, ones | position_bit(flip)}};
}

std::strong_ordering canonical_compare(const CubeEdge& a, const CubeEdge& b) {
  if (a.dimension != b.dimension) return a.dimension <=> b.dimension;
  if (auto c = compare_sets(a.ones, b.ones); c != 0) return c;
  return a.flip <=> b.flip;
}

CubeEdge parse_edge(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.size() < 2 || body.back() != ']')
      throw ParseError("unterminated bracket in edge '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  } else if (!body.empty() && body.back() == ']') {
    throw ParseError("unbalanced bracket in edge '" + std::string(text) + "'");
  }
  if (body.empty()) throw ParseError("empty edge");
  if (body.size() > static_cast<std::size_t>(kMaxPositions))
    throw ParseError("edge longer than " + std::to_string(kMaxPositions) + " positions");
  PositionSet ones = 0;
  int flip = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    switch (body[i]) {
      case '0':
        break;
      case '1':
        ones |= position_bit(pos);
        break;
      case '*':
        if (flip != 0) throw ParseError("edge '" + std::string(text) + "' has more than one '*'");
        flip = pos;
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, body[i]) + "' in edge '" +
                         std::string(text) + "'");
    }
  }
  if (flip == 0) throw ParseError("edge '" + std::string(text) + "' has no '*'");
  return CubeEdge{static_cast<int>(body.size()), ones, flip};
}

std::string render_edge(const CubeEdge& e) {
  std::string s = "[";
  for (int p = 1; p <= e.dimension; ++p)
    s += p == e.flip ? '*' : (contains_position(e.ones, p) ? '1' : '0');
  s += ']';
  return s;
}

CubeEdge edge_between(const CubeVertex& a, const CubeVertex& b) {
  if (a.dimension != b.dimension) throw InvalidArgument("vertices of different dimension");
  const PositionSet diff = a.bits ^ b.bits;
  if (set_size(diff) != 1)
    throw InvalidArgument(render_vertex(a) + " and " + render_vertex(b) + " are not adjacent");
  return CubeEdge{a.dimension, a.bits & b.bits, std::countr_zero(diff) + 1};
}

CubeSubgraph::CubeSubgraph(int dimension, std::vector<CubeEdge> edges)
    : dimension_(dimension), edges_(std::move(edges)) {
  if (dimension < 1 || dimension > kMaxPositions)
    throw InvalidArgument("subgraph dimension out of range: " + std::to_string(dimension));
  for (const auto& e : edges_) {
    if (e.dimension != dimension)
      throw InvalidArgument("edge " + render_edge(e) + " does not live in Q_" +
                            std::to_string(dimension));
    CubeEdge::make(e.dimension, e.ones, e.flip);
  }
  std::sort(edges_.begin(), edges_.end(), CanonicalLess{});
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::uint64_t CubeSubgraph::full_edge_count(int n) {
  return n <= 0 ? 0 : (std::uint64_t{1} << (n - 1)) * static_cast<std::uint64_t>(n);
}

CubeSubgraph CubeSubgraph::full(int n, int max_dimension) {
  if (n < 1) throw InvalidArgument("full cube needs n >= 1");
  if (n > max_dimension) throw CapExceeded("dimension", max_dimension, n);
  CubeSubgraph g;
  g.dimension_ = n;
  if (n > kMaterializeLimit) {
    g.lazy_full_ = true;
    return g;
  }
  g.edges_.reserve(full_edge_count(n));
  auto push = [&](const CubeEdge& e) { g.edges_.push_back(e); };
  for_each_full_edge(n, push);
  return g;
}

std::uint64_t CubeSubgraph::size() const {
  return lazy_full_ ? full_edge_count(dimension_) : edges_.size();
}

bool CubeSubgraph::contains(const CubeEdge& e) const {
  if (e.dimension != dimension_) return false;
  if (lazy_full_) return e.flip >= 1 && e.flip <= dimension_ && !contains_position(e.ones, e.flip);
  return std::binary_search(edges_.begin(), edges_.end(), e, CanonicalLess{});
}

std::vector<CubeEdge> CubeSubgraph::edges() const {
  if (!lazy_full_) return edges_;
  std::vector<CubeEdge> out;
  out.reserve(size());
  for_each_edge([&](const CubeEdge& e) { out.push_back(e); });
  return out;
}

CubeSubgraph CubeSubgraph::without(const CubeEdge& e) const {
  std::vector<CubeEdge> kept;
  kept.reserve(size());
  for_each_edge([&](const CubeEdge& x) {
    if (!(x == e)) kept.push_back(x);
  });
  return CubeSubgraph(dimension_, std::move(kept));
}

bool operator==(const CubeSubgraph& a, const CubeSubgraph& b) {
  if (a.dimension_ != b.dimension_ || a.size() != b.size()) return false;
  if (a.lazy_full_ || b.lazy_full_) return a.is_complete() && b.is_complete();
  return a.edges_ == b.edges_;
}

CubeSubgraph full_cube(int n, int max_dimension) { return CubeSubgraph::full(n, max_dimension); }

}  // namespace cuberep

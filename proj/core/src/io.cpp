#include "cuberep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cuberep/error.hpp"

namespace cuberep {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Content lines with their 1-based numbers.
class LineCursor {
 public:
  explicit LineCursor(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      const std::string_view t = trim(text.substr(start, end - start));
      if (!t.empty() && t.front() != '#') lines_.push_back({number, t});
      start = end + 1;
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  Line next() {
    if (done()) throw ParseError("unexpected end of input", last_line());
    return lines_[pos_++];
  }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }
  void expect_done() const {
    if (!done()) throw ParseError("unexpected trailing content '" + std::string(peek().text) + "'", peek().number);
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

long long parse_int(std::string_view s, int line, const std::string& what) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected integer for " + what + ", got '" + std::string(s) + "'", line);
  return v;
}

std::vector<long long> parse_ints(std::string_view s, int line, const std::string& what) {
  std::vector<long long> out;
  s = trim(s);
  while (!s.empty()) {
    std::size_t end = s.find_first_of(" \t");
    if (end == std::string_view::npos) end = s.size();
    out.push_back(parse_int(s.substr(0, end), line, what));
    s = trim(s.substr(end));
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// Value following `key=` on this line; throws if the key is missing.
std::string_view value_after(const Line& line, std::string_view key) {
  if (!starts_with(line.text, key))
    throw ParseError("expected '" + std::string(key) + "'", line.number);
  return line.text.substr(key.size());
}

CubeSubgraph parse_cube_block(LineCursor& cur, bool stop_at_keys) {
  const Line header = cur.next();
  const long long n = parse_int(value_after(header, "n="), header.number, "n");
  if (n < 1 || n > kMaxPositions) throw ParseError("dimension n=" + std::to_string(n) + " out of range", header.number);
  std::vector<CubeEdge> edges;
  std::vector<std::pair<CubeEdge, int>> seen;
  while (!cur.done()) {
    const Line& l = cur.peek();
    if (stop_at_keys && l.text.find('=') != std::string_view::npos) break;
    cur.next();
    CubeEdge e;
    try {
      e = parse_edge(l.text);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), l.number);
    }
    if (e.dimension != n)
      throw ParseError("edge " + render_edge(e) + " has length " + std::to_string(e.dimension) + ", expected " +
                           std::to_string(n),
                       l.number);
    edges.push_back(e);
    seen.emplace_back(e, l.number);
  }
  std::sort(seen.begin(), seen.end(),
            [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw ParseError("duplicate edge " + render_edge(seen[i].first), std::max(seen[i].second, seen[i - 1].second));
  return CubeSubgraph(static_cast<int>(n), std::move(edges));
}

Representation parse_representation_block(LineCursor& cur) {
  CubeSubgraph host = parse_cube_block(cur, true);
  const Line kline = cur.next();
  const long long k = parse_int(value_after(kline, "k="), kline.number, "k");
  const Line sline = cur.next();
  const auto values = parse_ints(value_after(sline, "sigma="), sline.number, "sigma");
  std::vector<int> sigma(values.begin(), values.end());
  try {
    return Representation(host.dimension(), static_cast<int>(k), std::move(host), std::move(sigma));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), sline.number);
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += " " + std::to_string(x);
  return s;
}

}  // namespace

CubeSubgraph parse_cube_subgraph(std::string_view text) {
  LineCursor cur(text);
  CubeSubgraph g = parse_cube_block(cur, false);
  cur.expect_done();
  return g;
}

std::string write_cube_subgraph(const CubeSubgraph& g) {
  std::string out = "n=" + std::to_string(g.dimension()) + "\n";
  g.for_each_edge([&](const CubeEdge& e) { out += render_edge(e) + "\n"; });
  return out;
}

Representation parse_representation(std::string_view text) {
  LineCursor cur(text);
  Representation r = parse_representation_block(cur);
  cur.expect_done();
  return r;
}

std::string write_representation(const Representation& r) {
  return write_cube_subgraph(r.host) + "k=" + std::to_string(r.k) + "\nsigma=" + join(r.sigma) + "\n";
}

KUniformHypergraph parse_hypergraph(std::string_view text) {
  LineCursor cur(text);
  const Line header = cur.next();
  std::string_view rest = value_after(header, "m=");
  const std::size_t space = rest.find_first_of(" \t");
  if (space == std::string_view::npos) throw ParseError("expected 'm=<int> k=<int>'", header.number);
  const long long m = parse_int(rest.substr(0, space), header.number, "m");
  const std::string_view kpart = trim(rest.substr(space));
  if (!starts_with(kpart, "k=")) throw ParseError("expected 'k=<int>' after m", header.number);
  const long long k = parse_int(kpart.substr(2), header.number, "k");
  if (m < 0 || m > kMaxPositions) throw ParseError("vertex count m out of range", header.number);
  if (k < 1) throw ParseError("arity k must be >= 1", header.number);
  std::vector<PositionSet> edges;
  while (!cur.done()) {
    const Line l = cur.next();
    const auto vs = parse_ints(l.text, l.number, "vertex");
    if (static_cast<long long>(vs.size()) != k)
      throw ParseError("edge has " + std::to_string(vs.size()) + " vertices, expected " + std::to_string(k), l.number);
    PositionSet e = 0;
    for (long long v : vs) {
      if (v < 1 || v > m) throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m), l.number);
      if (contains_position(e, static_cast<int>(v)))
        throw ParseError("vertex " + std::to_string(v) + " repeated in edge", l.number);
      e |= position_bit(static_cast<int>(v));
    }
    edges.push_back(e);
  }
  return KUniformHypergraph(static_cast<int>(m), static_cast<int>(k), std::move(edges));
}

std::string write_hypergraph(const KUniformHypergraph& h) {
  std::string out = "m=" + std::to_string(h.vertex_count()) + " k=" + std::to_string(h.arity()) + "\n";
  for (PositionSet e : h.edges()) {
    std::string line;
    for_each_position(e, [&](int p) { line += (line.empty() ? "" : " ") + std::to_string(p); });
    out += line + "\n";
  }
  return out;
}

AbstractGraph parse_graph(std::string_view text) {
  LineCursor cur(text);
  if (cur.done()) throw ParseError("empty graph file");
  if (starts_with(cur.peek().text, "n=")) return to_abstract(parse_cube_subgraph(text)).graph;
  const Line header = cur.next();
  const long long v = parse_int(value_after(header, "v="), header.number, "v");
  if (v < 0) throw ParseError("negative vertex count", header.number);
  std::vector<std::pair<int, int>> edges;
  while (!cur.done()) {
    const Line l = cur.next();
    const auto ends = parse_ints(l.text, l.number, "vertex");
    if (ends.size() != 2) throw ParseError("graph edge needs two vertices", l.number);
    for (long long x : ends)
      if (x < 1 || x > v) throw ParseError("vertex " + std::to_string(x) + " outside 1.." + std::to_string(v), l.number);
    if (ends[0] == ends[1]) throw ParseError("loop at vertex " + std::to_string(ends[0]), l.number);
    edges.emplace_back(static_cast<int>(ends[0] - 1), static_cast<int>(ends[1] - 1));
  }
  return AbstractGraph(static_cast<int>(v), std::move(edges));
}

std::string write_graph(const AbstractGraph& g) {
  std::string out = "v=" + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, w] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(w + 1) + "\n";
  return out;
}

CubeCopyCertificate parse_certificate(std::string_view text) {
  LineCursor cur(text);
  CubeCopyCertificate c;
  c.representation = parse_representation_block(cur);
  const Line sline = cur.next();
  for (long long p : parse_ints(value_after(sline, "S="), sline.number, "anchor position")) {
    if (p < 1 || p > kMaxPositions) throw ParseError("anchor position out of range", sline.number);
    c.anchor |= position_bit(static_cast<int>(p));
  }
  const Line gline = cur.next();
  for (long long x : parse_ints(value_after(gline, "g="), gline.number, "g")) c.g.push_back(static_cast<int>(x));
  if (static_cast<int>(c.g.size()) != c.representation.l)
    throw ParseError("g has " + std::to_string(c.g.size()) + " entries, expected l=" +
                         std::to_string(c.representation.l),
                     gline.number);
  c.edges = parse_cube_block(cur, false);
  cur.expect_done();
  return c;
}

std::string write_certificate(const CubeCopyCertificate& c) {
  return write_representation(c.representation) + "S=" + join(positions_of(c.anchor)) + "\ng=" + join(c.g) + "\n" +
         write_cube_subgraph(c.edges);
}

namespace {

std::string extremal_header(std::uint64_t value, ExtremalStatus status) {
  return "value=" + std::to_string(value) + " status=" + status_name(status) + "\n";
}

std::pair<std::uint64_t, ExtremalStatus> parse_extremal_header(std::string_view text, std::string_view& rest) {
  std::string_view first;
  int line = 0;
  while (true) {
    ++line;
    const std::size_t nl = text.find('\n');
    first = trim(text.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!first.empty() && first.front() != '#') break;
    if (nl == std::string_view::npos) throw ParseError("missing 'value=' header", line);
    text = rest;
  }
  if (!starts_with(first, "value=")) throw ParseError("expected 'value=<int> status=<exact|lower>'", line);
  const std::size_t space = first.find(' ');
  if (space == std::string_view::npos) throw ParseError("missing status", line);
  const long long v = parse_int(first.substr(6, space - 6), line, "value");
  const std::string_view st = trim(first.substr(space));
  ExtremalStatus status;
  if (st == "status=exact") status = ExtremalStatus::exact;
  else if (st == "status=lower") status = ExtremalStatus::lower_bound;
  else throw ParseError("unknown status '" + std::string(st) + "'", line);
  return {static_cast<std::uint64_t>(v), status};
}

}  // namespace

std::string write_extremal(const CubeExtremalResult& r) {
  return extremal_header(r.value, r.status) + write_cube_subgraph(r.witness);
}

std::string write_extremal(const HypergraphExtremalResult& r) {
  return extremal_header(r.value, r.status) + write_hypergraph(r.witness);
}

CubeExtremalResult parse_cube_extremal(std::string_view text) {
  std::string_view rest;
  auto [value, status] = parse_extremal_header(text, rest);
  CubeExtremalResult r;
  r.value = value;
  r.status = status;
  r.witness = parse_cube_subgraph(rest);
  if (r.witness.size() != value) throw ParseError("witness has " + std::to_string(r.witness.size()) + " edges, value says " + std::to_string(value));
  return r;
}

HypergraphExtremalResult parse_hypergraph_extremal(std::string_view text) {
  std::string_view rest;
  auto [value, status] = parse_extremal_header(text, rest);
  HypergraphExtremalResult r;
  r.value = value;
  r.status = status;
  r.witness = parse_hypergraph(rest);
  if (r.witness.edge_count() != value) throw ParseError("witness edge count differs from value");
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace cuberep

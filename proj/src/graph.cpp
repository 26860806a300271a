#include "gff/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace gff {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  degree_.assign(static_cast<size_t>(n), 0);
  incident_.assign(static_cast<size_t>(n), {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw PreconditionError("loop edge at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw PreconditionError("edge endpoint out of range: " +
                              std::to_string(e.u) + " " + std::to_string(e.v));
    if (!seen.insert({e.u, e.v}).second)
      throw PreconditionError("duplicate edge " + std::to_string(e.u) + " " +
                              std::to_string(e.v));
    degree_[static_cast<size_t>(e.u)]++;
    degree_[static_cast<size_t>(e.v)]++;
    incident_[static_cast<size_t>(e.u)].push_back(static_cast<int>(i));
    incident_[static_cast<size_t>(e.v)].push_back(static_cast<int>(i));
  }
}

std::optional<int> Graph::findEdge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  const auto& inc = incident_[static_cast<size_t>(u)];
  for (int id : inc) {
    if (edges_[static_cast<size_t>(id)].u == u &&
        edges_[static_cast<size_t>(id)].v == v)
      return id;
  }
  return std::nullopt;
}

VertexFunc::VertexFunc(std::vector<int> values, FuncRole role)
    : values_(std::move(values)), role_(role) {
  for (size_t i = 0; i < values_.size(); ++i)
    if (values_[i] < 0)
      throw PreconditionError("negative value at vertex " + std::to_string(i));
}

VertexFunc degreeFunc(const Graph& g) {
  return VertexFunc(g.degrees(), FuncRole::Derived);
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0)
      throw PreconditionError("negative vertex id in set");
    if (i > 0 && members_[i] == members_[i - 1])
      throw PreconditionError("duplicate vertex " + std::to_string(members_[i]) +
                              " in set");
  }
}

bool VertexSet::contains(Vertex x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool VertexSet::disjointWith(const VertexSet& other) const {
  // both sorted
  size_t i = 0, j = 0;
  while (i < members_.size() && j < other.members_.size()) {
    if (members_[i] == other.members_[j]) return false;
    if (members_[i] < other.members_[j])
      ++i;
    else
      ++j;
  }
  return true;
}

bool setLess(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

bool pairLess(const VertexSet& s1, const VertexSet& t1,
              const VertexSet& s2, const VertexSet& t2) {
  int sum1 = s1.size() + t1.size();
  int sum2 = s2.size() + t2.size();
  if (sum1 != sum2) return sum1 < sum2;
  if (!(s1 == s2)) return setLess(s1, s2);
  return setLess(t1, t2);
}

EdgeSubgraph::EdgeSubgraph(const Graph& host, std::vector<int> edgeIndices)
    : host_(&host), indices_(std::move(edgeIndices)) {
  std::sort(indices_.begin(), indices_.end());
  degree_.assign(static_cast<size_t>(host.vertexCount()), 0);
  for (size_t i = 0; i < indices_.size(); ++i) {
    int id = indices_[i];
    if (id < 0 || id >= host.edgeCount())
      throw PreconditionError("edge index " + std::to_string(id) +
                              " out of range for host graph");
    if (i > 0 && indices_[i] == indices_[i - 1])
      throw PreconditionError("duplicate edge index " + std::to_string(id));
    const Edge& e = host.edge(id);
    degree_[static_cast<size_t>(e.u)]++;
    degree_[static_cast<size_t>(e.v)]++;
  }
}

bool EdgeSubgraph::containsEdge(int edgeId) const {
  return std::binary_search(indices_.begin(), indices_.end(), edgeId);
}

const Graph& EdgeSubgraph::host() const {
  if (!host_) throw PreconditionError("subgraph has no host graph");
  return *host_;
}

void requireCompatible(const Graph& g, const EdgeSubgraph& h) {
  if (&h.host() != &g)
    throw PreconditionError("subgraph is bound to a different host graph");
}

// --- parsing ---------------------------------------------------------------

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenizeLines(std::string_view text) {
  std::vector<Line> out;
  int lineNo = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++lineNo;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    // strip trailing CR
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;       // blank
    if (line[first] == '#') continue;                     // comment
    Line l{lineNo, {}};
    std::istringstream iss{std::string(line)};
    std::string tok;
    while (iss >> tok) l.tokens.push_back(tok);
    out.push_back(std::move(l));
  }
  return out;
}

int parseInt(const std::string& tok, int lineNo, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineNo, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

Graph parseGraph(std::string_view text) {
  auto lines = tokenizeLines(text);
  if (lines.empty()) throw ParseError(1, "missing 'p <n> <m>' header");
  const Line& header = lines[0];
  if (header.tokens.size() != 3 || header.tokens[0] != "p")
    throw ParseError(header.number, "expected 'p <n> <m>' header");
  int n = parseInt(header.tokens[1], header.number, "vertex count");
  int m = parseInt(header.tokens[2], header.number, "edge count");
  if (n < 0 || m < 0)
    throw ParseError(header.number, "negative count in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  std::set<std::pair<int, int>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[0] != "e")
      throw ParseError(l.number, "expected 'e <u> <v>'");
    int u = parseInt(l.tokens[1], l.number, "endpoint");
    int v = parseInt(l.tokens[2], l.number, "endpoint");
    if (u == v) throw ParseError(l.number, "loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(l.number, "endpoint out of range (n = " + std::to_string(n) + ")");
    if (u > v)
      throw ParseError(l.number, "endpoints must satisfy u < v");
    if (static_cast<int>(edges.size()) >= m)
      throw ParseError(l.number, "more than " + std::to_string(m) + " edge lines");
    if (!seen.insert({u, v}).second)
      throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v));
    edges.push_back({u, v});
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

VertexFunc parseVertexFunc(std::string_view text, const Graph& g, FuncRole role) {
  auto lines = tokenizeLines(text);
  int n = g.vertexCount();
  std::vector<int> values(static_cast<size_t>(n), 0);
  std::vector<bool> covered(static_cast<size_t>(n), false);
  for (const Line& l : lines) {
    if (l.tokens.size() != 2)
      throw ParseError(l.number, "expected '<vertex> <value>'");
    int x = parseInt(l.tokens[0], l.number, "vertex");
    int v = parseInt(l.tokens[1], l.number, "value");
    if (x < 0 || x >= n)
      throw ParseError(l.number, "vertex " + std::to_string(x) + " out of range");
    if (covered[static_cast<size_t>(x)])
      throw ParseError(l.number, "duplicate vertex " + std::to_string(x));
    if (v < 0)
      throw ParseError(l.number, "negative value for vertex " + std::to_string(x));
    covered[static_cast<size_t>(x)] = true;
    values[static_cast<size_t>(x)] = v;
  }
  for (int x = 0; x < n; ++x)
    if (!covered[static_cast<size_t>(x)])
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "vertex " + std::to_string(x) + " uncovered");
  return VertexFunc(std::move(values), role);
}

EdgeSubgraph parseSubgraph(std::string_view text, const Graph& g) {
  auto lines = tokenizeLines(text);
  std::vector<int> indices;
  std::set<int> seen;
  for (const Line& l : lines) {
    if (l.tokens.size() != 3 || l.tokens[0] != "e")
      throw ParseError(l.number, "expected 'e <u> <v>'");
    int u = parseInt(l.tokens[1], l.number, "endpoint");
    int v = parseInt(l.tokens[2], l.number, "endpoint");
    auto id = g.findEdge(u, v);
    if (!id)
      throw ParseError(l.number, "no such edge " + std::to_string(u) + " " +
                                     std::to_string(v) + " in host graph");
    if (!seen.insert(*id).second)
      throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v));
    indices.push_back(*id);
  }
  return EdgeSubgraph(g, std::move(indices));
}

// --- set/degree arithmetic -------------------------------------------------

namespace {

void requireValidSet(const Graph& g, const VertexSet& s, const char* name) {
  if (!s.empty() && s.members().back() >= g.vertexCount())
    throw PreconditionError(std::string(name) + " contains a vertex id >= n");
}

void requireDisjoint(const VertexSet& s, const VertexSet& t) {
  if (!s.disjointWith(t))
    throw PreconditionError("S and T are not disjoint");
}

}  // namespace

long long funcSum(const VertexFunc& phi, const VertexSet& s) {
  long long sum = 0;
  for (Vertex x : s.members()) {
    if (x >= phi.size())
      throw PreconditionError("set contains a vertex id outside the function's domain");
    sum += phi(x);
  }
  return sum;
}

long long edgesBetween(const Graph& g, const VertexSet& s, const VertexSet& t) {
  requireValidSet(g, s, "S");
  requireValidSet(g, t, "T");
  requireDisjoint(s, t);
  long long count = 0;
  for (const Edge& e : g.edges()) {
    bool us = s.contains(e.u), vs = s.contains(e.v);
    bool ut = t.contains(e.u), vt = t.contains(e.v);
    if ((us && vt) || (ut && vs)) ++count;
  }
  return count;
}

long long edgesBetween(const EdgeSubgraph& h, const VertexSet& s, const VertexSet& t) {
  requireValidSet(h.host(), s, "S");
  requireValidSet(h.host(), t, "T");
  requireDisjoint(s, t);
  long long count = 0;
  for (int id : h.edgeIndices()) {
    const Edge& e = h.host().edge(id);
    bool us = s.contains(e.u), vs = s.contains(e.v);
    bool ut = t.contains(e.u), vt = t.contains(e.v);
    if ((us && vt) || (ut && vs)) ++count;
  }
  return count;
}

long long degAfterRemoval(const Graph& g, const VertexSet& s, const VertexSet& t) {
  requireValidSet(g, s, "S");
  requireValidSet(g, t, "T");
  requireDisjoint(s, t);
  long long sum = 0;
  for (Vertex x : t.members()) {
    sum += g.degree(x);
    for (int id : g.incidentEdges(x)) {
      const Edge& e = g.edge(id);
      Vertex other = (e.u == x) ? e.v : e.u;
      if (s.contains(other)) --sum;
    }
  }
  return sum;
}

Graph removeEdges(const Graph& g, const EdgeSubgraph& h) {
  requireCompatible(g, h);
  std::vector<Edge> kept;
  kept.reserve(static_cast<size_t>(g.edgeCount() - h.edgeCount()));
  for (int id = 0; id < g.edgeCount(); ++id)
    if (!h.containsEdge(id)) kept.push_back(g.edge(id));
  return Graph(g.vertexCount(), std::move(kept));
}

}  // namespace gff

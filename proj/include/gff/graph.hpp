#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gff {

using Vertex = int;

// Base class for everything this library throws. The CLI maps any
// Error to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input-file problem; message starts with "line N: ".
class ParseError : public Error {
public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// A caller violated an operation's precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An enumeration guard tripped (instance too large for an exhaustive scan).
class GuardError : public Error {
public:
  using Error::Error;
};

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; the constructor rejects loops, duplicate edges and
// out-of-range endpoints.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertexCount() const { return n_; }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
  int degree(Vertex x) const { return degree_[static_cast<size_t>(x)]; }
  const std::vector<int>& degrees() const { return degree_; }

  // Incident edge ids of x, in edge-list order.
  const std::vector<int>& incidentEdges(Vertex x) const {
    return incident_[static_cast<size_t>(x)];
  }

  // Edge id of {u,v} in either endpoint order, if present.
  std::optional<int> findEdge(Vertex u, Vertex v) const;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> incident_;
};

enum class FuncRole { G, F, R, RPrime, Derived };

// Integer-valued function on the vertices of a host graph (plays g, f,
// r, r', d_H). Values are non-negative; per-theorem positivity is
// checked by the operations that need it.
class VertexFunc {
public:
  VertexFunc() = default;
  explicit VertexFunc(std::vector<int> values, FuncRole role = FuncRole::Derived);

  int operator()(Vertex x) const { return values_[static_cast<size_t>(x)]; }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  FuncRole role() const { return role_; }

  friend bool operator==(const VertexFunc& a, const VertexFunc& b) {
    return a.values_ == b.values_;
  }

private:
  std::vector<int> values_;
  FuncRole role_ = FuncRole::Derived;
};

// d_G as a VertexFunc.
VertexFunc degreeFunc(const Graph& g);

// Sorted duplicate-free set of vertex ids. Total order used everywhere
// for witnesses: first by cardinality, then lexicographically on the
// sorted member list.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  bool contains(Vertex x) const;
  bool disjointWith(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members_ == b.members_;
  }

private:
  std::vector<Vertex> members_;
};

// (cardinality, lexicographic) order on vertex sets.
bool setLess(const VertexSet& a, const VertexSet& b);

// Global pair order: |S|+|T| first, then S, then T under setLess.
bool pairLess(const VertexSet& s1, const VertexSet& t1,
              const VertexSet& s2, const VertexSet& t2);

// Subset of a host graph's edges, stored as edge indices so H ⊆ G holds
// by construction. Keeps a pointer to the host; the host must outlive it.
class EdgeSubgraph {
public:
  EdgeSubgraph() = default;
  EdgeSubgraph(const Graph& host, std::vector<int> edgeIndices);

  const Graph& host() const;
  const std::vector<int>& edgeIndices() const { return indices_; }
  int edgeCount() const { return static_cast<int>(indices_.size()); }
  bool containsEdge(int edgeId) const;
  // d_H(x)
  int degree(Vertex x) const { return degree_[static_cast<size_t>(x)]; }
  const std::vector<int>& degrees() const { return degree_; }

private:
  const Graph* host_ = nullptr;
  std::vector<int> indices_;  // sorted
  std::vector<int> degree_;
};

// --- file formats ---------------------------------------------------------
//
// Graph file:     "p <n> <m>" then exactly m lines "e <u> <v>", 0 <= u < v < n.
// Function file:  n lines "<vertex> <value>", each vertex exactly once.
// Subgraph file:  zero or more lines "e <u> <v>", each an edge of the host.
// '#'-prefixed lines are comments; blank lines are ignored.

Graph parseGraph(std::string_view text);
VertexFunc parseVertexFunc(std::string_view text, const Graph& g,
                           FuncRole role = FuncRole::Derived);
EdgeSubgraph parseSubgraph(std::string_view text, const Graph& g);

// --- set/degree arithmetic -------------------------------------------------

// φ(S) = Σ_{x∈S} φ(x); φ(∅) = 0.
long long funcSum(const VertexFunc& phi, const VertexSet& s);

// Number of edges with one endpoint in S and the other in T (S, T disjoint).
long long edgesBetween(const Graph& g, const VertexSet& s, const VertexSet& t);
long long edgesBetween(const EdgeSubgraph& h, const VertexSet& s, const VertexSet& t);

// Σ_{x∈T} degree of x after deleting S and its incident edges.
long long degAfterRemoval(const Graph& g, const VertexSet& s, const VertexSet& t);

// Same vertex set, edge list of g minus h's edges, relative order kept.
Graph removeEdges(const Graph& g, const EdgeSubgraph& h);

// Throws unless h was built against g (same object) with in-range indices.
void requireCompatible(const Graph& g, const EdgeSubgraph& h);

}  // namespace gff

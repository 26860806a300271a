#pragma once

// Shared fixtures plus naive re-implementations of every quantity under
// test. The naive versions work straight off the edge list so they share no
// code path with the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gff/conditions.hpp"
#include "gff/graph.hpp"

namespace testutil {

using gff::Edge;
using gff::EdgeSubgraph;
using gff::Graph;
using gff::Vertex;
using gff::VertexFunc;
using gff::VertexSet;

inline Graph makeGraph(int n, const std::vector<std::pair<int, int>>& es) {
  std::vector<Edge> edges;
  for (auto [u, v] : es) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph pathGraph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return makeGraph(n, es);
}

inline Graph cycleGraph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({0, n - 1});
  return makeGraph(n, es);
}

// Center is vertex 0.
inline Graph starGraph(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return makeGraph(leaves + 1, es);
}

inline Graph completeGraph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return makeGraph(n, es);
}

// Graph with edge set given by bitmask over the C(n,2) pairs in
// lexicographic order; enumerates every labeled graph on n vertices.
inline Graph maskGraph(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> es;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) es.push_back({u, v});
  return makeGraph(n, es);
}

inline VertexFunc constFunc(int n, int value,
                            gff::FuncRole role = gff::FuncRole::Derived) {
  return VertexFunc(std::vector<int>(static_cast<size_t>(n), value), role);
}

inline VertexFunc funcOf(std::vector<int> vals,
                         gff::FuncRole role = gff::FuncRole::Derived) {
  return VertexFunc(std::move(vals), role);
}

inline VertexSet vs(std::vector<Vertex> members) {
  return VertexSet(std::move(members));
}

inline std::vector<int> maskToList(unsigned mask) {
  std::vector<int> out;
  for (int x = 0; mask >> x; ++x)
    if (mask >> x & 1) out.push_back(x);
  return out;
}

inline VertexSet maskToSet(unsigned mask) { return VertexSet(maskToList(mask)); }

// sum over x in T of the degree of x once S and its edges are deleted.
inline long long naiveDegAfter(const Graph& g, unsigned sMask, unsigned tMask) {
  long long total = 0;
  for (const Edge& e : g.edges()) {
    bool uInS = sMask >> e.u & 1, vInS = sMask >> e.v & 1;
    if (tMask >> e.u & 1 && !vInS) ++total;
    if (tMask >> e.v & 1 && !uInS) ++total;
  }
  return total;
}

inline long long naiveSum(const VertexFunc& phi, unsigned mask) {
  long long total = 0;
  for (int x = 0; x < phi.size(); ++x)
    if (mask >> x & 1) total += phi(x);
  return total;
}

inline int naiveDegH(const EdgeSubgraph& h, Vertex x) {
  int d = 0;
  for (int id : h.edgeIndices()) {
    const Edge& e = h.host().edge(id);
    if (e.u == x || e.v == x) ++d;
  }
  return d;
}

inline long long naiveEdgesH(const EdgeSubgraph& h, unsigned sMask,
                             unsigned tMask) {
  long long total = 0;
  for (int id : h.edgeIndices()) {
    const Edge& e = h.host().edge(id);
    bool a = (sMask >> e.u & 1) && (tMask >> e.v & 1);
    bool b = (sMask >> e.v & 1) && (tMask >> e.u & 1);
    if (a || b) ++total;
  }
  return total;
}

// f(S) + d_{G-S}(T) - g(T)
inline long long naiveFracDef(const Graph& g, const VertexFunc& lo,
                              const VertexFunc& hi, unsigned sMask,
                              unsigned tMask) {
  return naiveSum(hi, sMask) + naiveDegAfter(g, sMask, tMask) -
         naiveSum(lo, tMask);
}

// g(S) + d_{G-S}(T) - f(T) - d_H(S) + e_H(S,T)
inline long long naiveAllDef(const Graph& g, const VertexFunc& lo,
                             const VertexFunc& hi, const EdgeSubgraph& h,
                             unsigned sMask, unsigned tMask) {
  long long dHS = 0;
  for (int x = 0; x < g.vertexCount(); ++x)
    if (sMask >> x & 1) dHS += naiveDegH(h, x);
  return naiveSum(lo, sMask) + naiveDegAfter(g, sMask, tMask) -
         naiveSum(hi, tMask) - dHS + naiveEdgesH(h, sMask, tMask);
}

struct NaivePair {
  std::vector<int> s, t;
  long long def = 0;
};

inline bool listLess(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline bool naivePairLess(const NaivePair& a, const NaivePair& b) {
  size_t sumA = a.s.size() + a.t.size(), sumB = b.s.size() + b.t.size();
  if (sumA != sumB) return sumA < sumB;
  if (a.s != b.s) return listLess(a.s, b.s);
  return listLess(a.t, b.t);
}

// Minimum violating pair of the plain existence condition, or nullopt.
inline std::optional<NaivePair> naiveWorstFrac(const Graph& g,
                                               const VertexFunc& lo,
                                               const VertexFunc& hi) {
  int n = g.vertexCount();
  std::optional<NaivePair> best;
  for (unsigned s = 0; s < (1u << n); ++s)
    for (unsigned t = 0; t < (1u << n); ++t) {
      if (s & t) continue;
      long long def = naiveFracDef(g, lo, hi, s, t);
      if (def >= 0) continue;
      NaivePair cand{maskToList(s), maskToList(t), def};
      if (!best || naivePairLess(cand, *best)) best = cand;
    }
  return best;
}

inline std::optional<NaivePair> naiveWorstAll(const Graph& g,
                                              const VertexFunc& lo,
                                              const VertexFunc& hi,
                                              const EdgeSubgraph& h) {
  int n = g.vertexCount();
  std::optional<NaivePair> best;
  for (unsigned s = 0; s < (1u << n); ++s)
    for (unsigned t = 0; t < (1u << n); ++t) {
      if (s & t) continue;
      long long def = naiveAllDef(g, lo, hi, h, s, t);
      if (def >= 0) continue;
      NaivePair cand{maskToList(s), maskToList(t), def};
      if (!best || naivePairLess(cand, *best)) best = cand;
    }
  return best;
}

// Exhaustive factor existence over h in {0, 1/2, 1}^m, as doubled values.
// Only sane for m <= ~12.
inline bool naiveFactorExists(const Graph& g, const VertexFunc& lo,
                              const VertexFunc& hi) {
  int m = g.edgeCount();
  long long combos = 1;
  for (int i = 0; i < m; ++i) combos *= 3;
  std::vector<int> twice(static_cast<size_t>(m));
  for (long long code = 0; code < combos; ++code) {
    long long c = code;
    for (int i = 0; i < m; ++i) {
      twice[static_cast<size_t>(i)] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (int x = 0; x < g.vertexCount() && ok; ++x) {
      long long deg2 = 0;
      for (int id = 0; id < m; ++id) {
        const Edge& e = g.edge(id);
        if (e.u == x || e.v == x) deg2 += twice[static_cast<size_t>(id)];
      }
      ok = deg2 >= 2LL * lo(x) && deg2 <= 2LL * hi(x);
    }
    if (ok) return true;
  }
  return false;
}

// Same, with every edge of H pinned to h=1.
inline bool naiveIncludingExists(const Graph& g, const VertexFunc& r,
                                 const EdgeSubgraph& h) {
  int m = g.edgeCount();
  std::vector<bool> pinned(static_cast<size_t>(m), false);
  for (int id : h.edgeIndices()) pinned[static_cast<size_t>(id)] = true;
  std::vector<int> freeIds;
  for (int id = 0; id < m; ++id)
    if (!pinned[static_cast<size_t>(id)]) freeIds.push_back(id);

  long long combos = 1;
  for (size_t i = 0; i < freeIds.size(); ++i) combos *= 3;
  std::vector<int> twice(static_cast<size_t>(m));
  for (long long code = 0; code < combos; ++code) {
    for (int id = 0; id < m; ++id)
      twice[static_cast<size_t>(id)] = pinned[static_cast<size_t>(id)] ? 2 : 0;
    long long c = code;
    for (int freeId : freeIds) {
      twice[static_cast<size_t>(freeId)] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (int x = 0; x < g.vertexCount() && ok; ++x) {
      long long deg2 = 0;
      for (int id = 0; id < m; ++id) {
        const Edge& e = g.edge(id);
        if (e.u == x || e.v == x) deg2 += twice[static_cast<size_t>(id)];
      }
      ok = deg2 == 2LL * r(x);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace testutil

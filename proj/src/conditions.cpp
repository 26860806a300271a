#include "gff/conditions.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace gff {

namespace {

using Mask = std::uint32_t;

// Exhaustive pair scans use 32-bit vertex masks.
constexpr int kMaxEnumVertices = 30;

void requireSizes(const Graph& g, const VertexFunc& lo, const VertexFunc& hi) {
  if (lo.size() != g.vertexCount() || hi.size() != g.vertexCount())
    throw PreconditionError("function length does not match vertex count");
}

void requireLoLeHi(const VertexFunc& lo, const VertexFunc& hi) {
  for (int x = 0; x < lo.size(); ++x)
    if (lo(x) > hi(x))
      throw PreconditionError("g > f at vertex " + std::to_string(x));
}

void requirePositive(const VertexFunc& lo, const VertexFunc& hi) {
  for (int x = 0; x < lo.size(); ++x)
    if (lo(x) < 1 || hi(x) < 1)
      throw PreconditionError(
          "value 0 at vertex " + std::to_string(x) +
          " (theorem statements need g,f >= 1; pass allowZero to accept)");
}

void requireEnumerable(const Graph& g) {
  if (g.vertexCount() > kMaxEnumVertices)
    throw GuardError("vertex count " + std::to_string(g.vertexCount()) +
                     " exceeds the enumeration limit of " +
                     std::to_string(kMaxEnumVertices));
}

// Bitmask evaluation context for the two deficiency functions.
struct EvalContext {
  std::vector<Mask> adj;    // neighbours in G
  std::vector<Mask> adjH;   // neighbours in H
  std::vector<int> deg;
  std::vector<int> degH;
  const VertexFunc* lo = nullptr;
  const VertexFunc* hi = nullptr;

  EvalContext(const Graph& g, const VertexFunc& loF, const VertexFunc& hiF,
              const EdgeSubgraph* h)
      : adj(static_cast<size_t>(g.vertexCount()), 0),
        adjH(static_cast<size_t>(g.vertexCount()), 0),
        deg(g.degrees()),
        degH(static_cast<size_t>(g.vertexCount()), 0),
        lo(&loF),
        hi(&hiF) {
    for (const Edge& e : g.edges()) {
      adj[static_cast<size_t>(e.u)] |= Mask{1} << e.v;
      adj[static_cast<size_t>(e.v)] |= Mask{1} << e.u;
    }
    if (h) {
      degH = h->degrees();
      for (int id : h->edgeIndices()) {
        const Edge& e = h->host().edge(id);
        adjH[static_cast<size_t>(e.u)] |= Mask{1} << e.v;
        adjH[static_cast<size_t>(e.v)] |= Mask{1} << e.u;
      }
    }
  }

  long long sumLo(Mask m) const {
    long long s = 0;
    for (Mask t = m; t; t &= t - 1) s += (*lo)(std::countr_zero(t));
    return s;
  }
  long long sumHi(Mask m) const {
    long long s = 0;
    for (Mask t = m; t; t &= t - 1) s += (*hi)(std::countr_zero(t));
    return s;
  }
  long long degAfter(Mask sMask, Mask tMask) const {
    long long s = 0;
    for (Mask t = tMask; t; t &= t - 1) {
      int x = std::countr_zero(t);
      s += deg[static_cast<size_t>(x)] -
           std::popcount(adj[static_cast<size_t>(x)] & sMask);
    }
    return s;
  }
  long long degHSum(Mask m) const {
    long long s = 0;
    for (Mask t = m; t; t &= t - 1) s += degH[static_cast<size_t>(std::countr_zero(t))];
    return s;
  }
  long long edgesH(Mask sMask, Mask tMask) const {
    long long s = 0;
    for (Mask t = sMask; t; t &= t - 1) {
      int x = std::countr_zero(t);
      s += std::popcount(adjH[static_cast<size_t>(x)] & tMask);
    }
    return s;
  }

  // f(S) + d_{G−S}(T) − g(T)
  long long fracDef(Mask s, Mask t) const {
    return sumHi(s) + degAfter(s, t) - sumLo(t);
  }
  // g(S) + d_{G−S}(T) − f(T) − d_H(S) + e_H(S,T)
  long long allDef(Mask s, Mask t) const {
    return sumLo(s) + degAfter(s, t) - sumHi(t) - degHSum(s) + edgesH(s, t);
  }
};

VertexSet setFromMask(Mask m) {
  std::vector<Vertex> v;
  for (Mask t = m; t; t &= t - 1) v.push_back(std::countr_zero(t));
  return VertexSet(std::move(v));
}

// (cardinality, lexicographic-on-sorted-members) order on masks. For equal
// cardinality the side owning the lowest differing bit has the smaller
// member first, hence the smaller list.
bool maskSetLess(Mask a, Mask b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  Mask d = a ^ b;
  if (!d) return false;
  return (a & (d & -d)) != 0;
}

bool maskPairLess(Mask s1, Mask t1, Mask s2, Mask t2) {
  int sum1 = std::popcount(s1) + std::popcount(t1);
  int sum2 = std::popcount(s2) + std::popcount(t2);
  if (sum1 != sum2) return sum1 < sum2;
  if (s1 != s2) return maskSetLess(s1, s2);
  return maskSetLess(t1, t2);
}

// Lexicographic k-combinations of items[0..size).
struct CombIter {
  int size = 0;
  int k = 0;
  std::vector<int> idx;

  void init(int size_, int k_) {
    size = size_;
    k = k_;
    idx.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  }
  bool advance() {
    for (int i = k - 1; i >= 0; --i) {
      if (idx[static_cast<size_t>(i)] < size - k + i) {
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        return true;
      }
    }
    return false;
  }
};

// Every subset of 0..n-1, ordered by (cardinality, lexicographic).
// visit returns false to stop.
template <typename F>
void forEachSubsetOrdered(int n, F&& visit) {
  CombIter c;
  for (int k = 0; k <= n; ++k) {
    c.init(n, k);
    do {
      Mask m = 0;
      for (int i : c.idx) m |= Mask{1} << i;
      if (!visit(m)) return;
    } while (c.advance());
  }
}

// Every disjoint pair (S,T), ordered by (|S|+|T|, S, T) — the global
// witness order, so the first violation seen is the minimal witness.
template <typename F>
void forEachPairOrdered(int n, F&& visit) {
  std::vector<int> avail;
  CombIter sc, tc;
  for (int total = 0; total <= n; ++total) {
    for (int sCard = 0; sCard <= total; ++sCard) {
      int tCard = total - sCard;
      if (tCard > n - sCard) continue;
      sc.init(n, sCard);
      do {
        Mask sMask = 0;
        for (int i : sc.idx) sMask |= Mask{1} << i;
        avail.clear();
        for (int x = 0; x < n; ++x)
          if (!(sMask >> x & 1)) avail.push_back(x);
        tc.init(static_cast<int>(avail.size()), tCard);
        do {
          Mask tMask = 0;
          for (int i : tc.idx) tMask |= Mask{1} << avail[static_cast<size_t>(i)];
          if (!visit(sMask, tMask)) return;
        } while (tc.advance());
      } while (sc.advance());
    }
  }
}

Mask maskOf(const VertexSet& s) {
  Mask m = 0;
  for (Vertex x : s.members()) m |= Mask{1} << x;
  return m;
}

struct GuardedCounter {
  long long count = 0;
  long long limit = 0;
  void tick() {
    if (++count > limit)
      throw GuardError("pair enumeration guard exceeded (" + std::to_string(limit) +
                       " evaluations); raise --max-pairs");
  }
};

}  // namespace

long long deficiencyFrac(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                         const VertexSet& s, const VertexSet& t) {
  requireSizes(g, lo, hi);
  requireLoLeHi(lo, hi);
  if (!s.disjointWith(t)) throw PreconditionError("S and T are not disjoint");
  return funcSum(hi, s) + degAfterRemoval(g, s, t) - funcSum(lo, t);
}

long long deficiencyAll(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                        const EdgeSubgraph& h, const VertexSet& s,
                        const VertexSet& t) {
  requireSizes(g, lo, hi);
  requireLoLeHi(lo, hi);
  requireCompatible(g, h);
  if (!s.disjointWith(t)) throw PreconditionError("S and T are not disjoint");
  long long dHS = 0;
  for (Vertex x : s.members()) dHS += h.degree(x);
  return funcSum(lo, s) + degAfterRemoval(g, s, t) - funcSum(hi, t) - dHS +
         edgesBetween(h, s, t);
}

VertexSet canonicalT(const Graph& g, const VertexFunc& phi, const VertexSet& s) {
  if (phi.size() != g.vertexCount())
    throw PreconditionError("function length does not match vertex count");
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.vertexCount(); ++x) {
    if (s.contains(x)) continue;
    long long d = g.degree(x);
    for (int id : g.incidentEdges(x)) {
      const Edge& e = g.edge(id);
      if (s.contains(e.u == x ? e.v : e.u)) --d;
    }
    if (d < phi(x)) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

CheckReport checkExists(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                        ExistsMode mode, const CheckOptions& opts) {
  requireSizes(g, lo, hi);
  requireLoLeHi(lo, hi);
  if (!opts.allowZero) requirePositive(lo, hi);
  requireEnumerable(g);

  EvalContext ctx(g, lo, hi, nullptr);
  int n = g.vertexCount();
  GuardedCounter guard{0, opts.maxPairs};
  CheckReport report;
  report.mode = (mode == ExistsMode::Canonical) ? "exists-canonical" : "exists-full";

  bool haveBest = false;
  Mask bestS = 0, bestT = 0;
  long long bestDef = 0;

  if (mode == ExistsMode::Canonical) {
    forEachSubsetOrdered(n, [&](Mask sMask) {
      Mask tMask = 0;
      for (int x = 0; x < n; ++x) {
        if (sMask >> x & 1) continue;
        long long d = ctx.deg[static_cast<size_t>(x)] -
                      std::popcount(ctx.adj[static_cast<size_t>(x)] & sMask);
        if (d < lo(x)) tMask |= Mask{1} << x;
      }
      guard.tick();
      long long def = ctx.fracDef(sMask, tMask);
      if (def < 0 && (!haveBest || maskPairLess(sMask, tMask, bestS, bestT))) {
        haveBest = true;
        bestS = sMask;
        bestT = tMask;
        bestDef = def;
      }
      return true;
    });
  } else {
    forEachPairOrdered(n, [&](Mask sMask, Mask tMask) {
      guard.tick();
      long long def = ctx.fracDef(sMask, tMask);
      if (def < 0) {
        haveBest = true;
        bestS = sMask;
        bestT = tMask;
        bestDef = def;
        return false;  // pairs arrive in witness order
      }
      return true;
    });
  }

  report.pairsExamined = guard.count;
  report.holds = !haveBest;
  if (haveBest)
    report.witness = Witness{setFromMask(bestS), setFromMask(bestT), bestDef};
  return report;
}

CheckReport checkAllIncluding(const Graph& g, const VertexFunc& lo,
                              const VertexFunc& hi, const EdgeSubgraph& h,
                              AllMode mode, const CheckOptions& opts) {
  requireSizes(g, lo, hi);
  requireLoLeHi(lo, hi);
  requireCompatible(g, h);
  if (!opts.allowZero) requirePositive(lo, hi);
  requireEnumerable(g);
  if (mode == AllMode::CanonicalNoH && h.edgeCount() != 0)
    throw PreconditionError("canonical-no-H mode requires an empty subgraph H");

  EvalContext ctx(g, lo, hi, &h);
  int n = g.vertexCount();
  GuardedCounter guard{0, opts.maxPairs};
  CheckReport report;
  switch (mode) {
    case AllMode::Full: report.mode = "all-full"; break;
    case AllMode::CanonicalNoH: report.mode = "all-canonical"; break;
    case AllMode::CanonicalFast: report.mode = "all-fast"; break;
  }

  bool haveBest = false;
  Mask bestS = 0, bestT = 0;
  long long bestDef = 0;

  if (mode == AllMode::Full) {
    forEachPairOrdered(n, [&](Mask sMask, Mask tMask) {
      guard.tick();
      long long def = ctx.allDef(sMask, tMask);
      if (def < 0) {
        haveBest = true;
        bestS = sMask;
        bestT = tMask;
        bestDef = def;
        return false;
      }
      return true;
    });
  } else {
    forEachSubsetOrdered(n, [&](Mask sMask) {
      Mask tMask = 0;
      for (int x = 0; x < n; ++x) {
        if (sMask >> x & 1) continue;
        long long d = ctx.deg[static_cast<size_t>(x)] -
                      std::popcount(ctx.adj[static_cast<size_t>(x)] & sMask);
        if (mode == AllMode::CanonicalFast)
          d += std::popcount(ctx.adjH[static_cast<size_t>(x)] & sMask);
        if (d < hi(x)) tMask |= Mask{1} << x;
      }
      guard.tick();
      long long def = ctx.allDef(sMask, tMask);
      if (def < 0 && (!haveBest || maskPairLess(sMask, tMask, bestS, bestT))) {
        haveBest = true;
        bestS = sMask;
        bestT = tMask;
        bestDef = def;
      }
      return true;
    });
  }

  report.pairsExamined = guard.count;
  report.holds = !haveBest;
  if (haveBest)
    report.witness = Witness{setFromMask(bestS), setFromMask(bestT), bestDef};
  return report;
}

CheckReport checkSufficient(const Graph& g, const VertexFunc& lo,
                            const VertexFunc& hi, const EdgeSubgraph& h) {
  requireSizes(g, lo, hi);
  requireCompatible(g, h);
  int n = g.vertexCount();
  for (Vertex x = 0; x < n; ++x) {
    if (h.degree(x) > lo(x))
      throw PreconditionError("hypothesis violated: d_H > g at vertex " +
                              std::to_string(x));
    if (lo(x) > hi(x))
      throw PreconditionError("hypothesis violated: g > f at vertex " +
                              std::to_string(x));
    if (hi(x) > g.degree(x))
      throw PreconditionError("hypothesis violated: f > d_G at vertex " +
                              std::to_string(x));
  }

  CheckReport report;
  report.mode = (h.edgeCount() == 0) ? "sufficient-cor6" : "sufficient-thm5";
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      ++report.pairsExamined;
      long long lhs = static_cast<long long>(lo(x) - h.degree(x)) * g.degree(y);
      long long rhs = static_cast<long long>(g.degree(x) - h.degree(x)) * hi(y);
      if (lhs < rhs) {
        report.holds = false;
        report.witness = Witness{VertexSet({x}), VertexSet({y}), lhs - rhs};
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

}  // namespace gff

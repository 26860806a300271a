#include "gff/solver.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "maxflow.hpp"

namespace gff {

namespace {

void requireInstance(const Graph& g, const VertexFunc& lo, const VertexFunc& hi) {
  if (lo.size() != g.vertexCount() || hi.size() != g.vertexCount())
    throw PreconditionError("function length does not match vertex count");
  for (int x = 0; x < lo.size(); ++x)
    if (lo(x) > hi(x))
      throw PreconditionError("g > f at vertex " + std::to_string(x));
}

struct CoverResult {
  bool feasible = false;
  std::vector<int> twice;  // per edge of the solved graph
};

// Feasible flow with lower bounds on the bipartite double cover:
// s -> x' and x'' -> t carry [lo(x), hi(x)]; every edge {u,v} becomes the
// unit arcs u' -> v'' and v' -> u''. An integral feasible flow exists iff a
// fractional factor does, and h(e) = (flow on the two images of e)/2.
CoverResult solveCover(const Graph& g, const VertexFunc& lo, const VertexFunc& hi) {
  int n = g.vertexCount();
  int m = g.edgeCount();
  int src = 2 * n, snk = 2 * n + 1, super = 2 * n + 2, superSink = 2 * n + 3;
  detail::MaxFlow net(2 * n + 4);
  std::vector<long long> excess(static_cast<size_t>(2 * n + 4), 0);

  auto addBounded = [&](int from, int to, long long low, long long high) {
    net.addArc(from, to, high - low);
    excess[static_cast<size_t>(to)] += low;
    excess[static_cast<size_t>(from)] -= low;
  };

  for (int x = 0; x < n; ++x) {
    addBounded(src, x, lo(x), hi(x));
    addBounded(n + x, snk, lo(x), hi(x));
  }
  std::vector<std::pair<int, int>> handleA(static_cast<size_t>(m));
  std::vector<std::pair<int, int>> handleB(static_cast<size_t>(m));
  for (int id = 0; id < m; ++id) {
    const Edge& e = g.edge(id);
    handleA[static_cast<size_t>(id)] = {e.u, net.addArc(e.u, n + e.v, 1)};
    handleB[static_cast<size_t>(id)] = {e.v, net.addArc(e.v, n + e.u, 1)};
  }
  net.addArc(snk, src, std::numeric_limits<long long>::max() / 4);

  long long need = 0;
  for (int v = 0; v < 2 * n + 2; ++v) {
    long long ex = excess[static_cast<size_t>(v)];
    if (ex > 0) {
      net.addArc(super, v, ex);
      need += ex;
    } else if (ex < 0) {
      net.addArc(v, superSink, -ex);
    }
  }

  CoverResult result;
  result.feasible = net.run(super, superSink) == need;
  if (result.feasible) {
    result.twice.resize(static_cast<size_t>(m));
    for (int id = 0; id < m; ++id) {
      auto [fa, ia] = handleA[static_cast<size_t>(id)];
      auto [fb, ib] = handleB[static_cast<size_t>(id)];
      result.twice[static_cast<size_t>(id)] =
          static_cast<int>(net.flowOn(fa, ia) + net.flowOn(fb, ib));
    }
  }
  return result;
}

SolveOutcome factorOutcome(FractionalFactor fac) {
  SolveOutcome out;
  out.factor = std::move(fac);
  return out;
}

SolveOutcome witnessOutcome(Witness w) {
  SolveOutcome out;
  out.witness = std::move(w);
  return out;
}

// Minimal witness for a plain instance known to be infeasible.
Witness recoverWitness(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                       const CheckOptions& opts) {
  CheckOptions relaxed = opts;
  relaxed.allowZero = true;
  CheckReport rep = checkExists(g, lo, hi, ExistsMode::Full, relaxed);
  if (rep.holds)
    throw Error("internal: flow reports infeasible but no witness pair exists");
  return *rep.witness;
}

}  // namespace

FractionalFactor::FractionalFactor(const Graph& host, std::vector<int> twiceH)
    : host_(&host), twice_(std::move(twiceH)) {
  if (static_cast<int>(twice_.size()) != host.edgeCount())
    throw PreconditionError("factor length does not match edge count");
  for (size_t i = 0; i < twice_.size(); ++i)
    if (twice_[i] < 0 || twice_[i] > 2)
      throw PreconditionError("factor value outside [0,1] on edge " +
                              std::to_string(i));
}

Rat FractionalFactor::value(int edgeId) const {
  int t = twice(edgeId);
  if (t == 1) return {1, 2};
  return {t / 2, 1};
}

long long FractionalFactor::twiceDegree(Vertex x) const {
  long long sum = 0;
  for (int id : host_->incidentEdges(x)) sum += twice_[static_cast<size_t>(id)];
  return sum;
}

std::vector<int> FractionalFactor::support() const {
  std::vector<int> out;
  for (size_t i = 0; i < twice_.size(); ++i)
    if (twice_[i] > 0) out.push_back(static_cast<int>(i));
  return out;
}

SolveOutcome solveFractionalFactor(const Graph& g, const VertexFunc& lo,
                                   const VertexFunc& hi,
                                   const CheckOptions& opts) {
  requireInstance(g, lo, hi);
  CoverResult res = solveCover(g, lo, hi);
  if (res.feasible) return factorOutcome(FractionalFactor(g, std::move(res.twice)));
  return witnessOutcome(recoverWitness(g, lo, hi, opts));
}

VertexFunc complementFunc(const Graph& g, const VertexFunc& r) {
  if (r.size() != g.vertexCount())
    throw PreconditionError("function length does not match vertex count");
  std::vector<int> vals(static_cast<size_t>(g.vertexCount()));
  for (int x = 0; x < g.vertexCount(); ++x) {
    if (r(x) > g.degree(x))
      throw PreconditionError("r > d_G at vertex " + std::to_string(x));
    vals[static_cast<size_t>(x)] = g.degree(x) - r(x);
  }
  return VertexFunc(std::move(vals), FuncRole::RPrime);
}

SolveOutcome solveIncluding(const Graph& g, const VertexFunc& r,
                            const EdgeSubgraph& h, IncludeRoute route,
                            const CheckOptions& opts) {
  requireInstance(g, r, r);
  requireCompatible(g, h);

  for (int x = 0; x < g.vertexCount(); ++x)
    if (r(x) < h.degree(x))
      return witnessOutcome(Witness{VertexSet({x}), VertexSet(std::vector<Vertex>{}),
                                    r(x) - h.degree(x)});

  Graph reduced = removeEdges(g, h);
  std::vector<int> rhVals(static_cast<size_t>(g.vertexCount()));
  for (int x = 0; x < g.vertexCount(); ++x)
    rhVals[static_cast<size_t>(x)] = r(x) - h.degree(x);
  VertexFunc rh(std::move(rhVals), FuncRole::Derived);

  std::vector<bool> inH(static_cast<size_t>(g.edgeCount()), false);
  for (int id : h.edgeIndices()) inH[static_cast<size_t>(id)] = true;
  std::vector<int> keep;
  for (int id = 0; id < g.edgeCount(); ++id)
    if (!inH[static_cast<size_t>(id)]) keep.push_back(id);

  CoverResult res;
  if (route == IncludeRoute::Complement) {
    VertexFunc rPrime = complementFunc(g, r);
    res = solveCover(reduced, rPrime, rPrime);
    for (int& t : res.twice) t = 2 - t;
  } else {
    res = solveCover(reduced, rh, rh);
  }

  if (res.feasible) {
    std::vector<int> twice(static_cast<size_t>(g.edgeCount()), 2);
    for (size_t i = 0; i < keep.size(); ++i)
      twice[static_cast<size_t>(keep[i])] = res.twice[i];
    return factorOutcome(FractionalFactor(g, std::move(twice)));
  }
  return witnessOutcome(recoverWitness(reduced, rh, rh, opts));
}

bool verifyFactor(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                  const FractionalFactor& fac) {
  if (&fac.host() != &g)
    throw PreconditionError("factor was built for a different graph");
  requireInstance(g, lo, hi);
  for (int x = 0; x < g.vertexCount(); ++x) {
    long long twiceDeg = fac.twiceDegree(x);
    if (twiceDeg < 2LL * lo(x) || twiceDeg > 2LL * hi(x)) return false;
  }
  return true;
}

bool verifyFactorIncluding(const Graph& g, const VertexFunc& r,
                           const EdgeSubgraph& h, const FractionalFactor& fac) {
  if (&fac.host() != &g)
    throw PreconditionError("factor was built for a different graph");
  requireCompatible(g, h);
  for (int id : h.edgeIndices())
    if (fac.twice(id) != 2) return false;
  return verifyFactor(g, r, r, fac);
}

}  // namespace gff

#pragma once

#include <optional>
#include <string>

#include "gff/graph.hpp"

namespace gff {

// Disjoint pair (S,T) with the slack of the condition it was checked
// against. A negative deficiency certifies failure and is replayable
// from the instance by the matching deficiency function.
struct Witness {
  VertexSet s;
  VertexSet t;
  long long deficiency = 0;
};

struct CheckOptions {
  // Theorem statements use strictly positive g,f; set this to accept 0
  // values (the definition-level reading).
  bool allowZero = false;
  // Upper bound on deficiency evaluations before a GuardError.
  long long maxPairs = 10'000'000;
};

struct CheckReport {
  bool holds = true;
  std::optional<Witness> witness;  // present exactly when holds is false
  long long pairsExamined = 0;
  long long rExamined = 0;               // brute-force mode only
  std::optional<VertexFunc> failingR;    // brute-force mode only
  std::string mode;
};

// f(S) + d_{G−S}(T) − g(T). Requires S,T disjoint and g ≤ f pointwise.
long long deficiencyFrac(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                         const VertexSet& s, const VertexSet& t);

// g(S) + d_{G−S}(T) − f(T) − d_H(S) + e_H(S,T). With E(H) = ∅ this is the
// all-factors quantity g(S) + d_{G−S}(T) − f(T).
long long deficiencyAll(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                        const EdgeSubgraph& h, const VertexSet& s, const VertexSet& t);

// {x ∈ V∖S : d_{G−S}(x) < phi(x)} — the T minimizing the deficiency for
// fixed S when each vertex contributes d_{G−S}(x) − phi(x).
VertexSet canonicalT(const Graph& g, const VertexFunc& phi, const VertexSet& s);

enum class ExistsMode { Canonical, Full };

// Fractional (g,f)-factor existence. Canonical mode scans every S with
// T = canonicalT(G,g,S); Full mode scans all disjoint (S,T) pairs.
// holds ⇔ deficiencyFrac ≥ 0 everywhere; on failure the witness is the
// minimal violating pair under the global order (|S|+|T|, S, T).
CheckReport checkExists(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                        ExistsMode mode, const CheckOptions& opts = {});

enum class AllMode {
  Full,          // all disjoint (S,T)
  CanonicalNoH,  // requires E(H) = ∅; T = canonicalT(G,f,S)
  CanonicalFast  // derived fast path: T = {x∉S : d_{G−S}(x)+e_H(S,{x}) < f(x)}
};

// "All fractional (g,f)-factors including H" condition:
// holds ⇔ deficiencyAll ≥ 0 over the iterated pairs.
CheckReport checkAllIncluding(const Graph& g, const VertexFunc& lo,
                              const VertexFunc& hi, const EdgeSubgraph& h,
                              AllMode mode, const CheckOptions& opts = {});

// Pairwise degree condition (g(x)−d_H(x))·d_G(y) ≥ (d_G(x)−d_H(x))·f(y)
// over all ordered vertex pairs. Requires d_H ≤ g ≤ f ≤ d_G at every
// vertex; a violation of that chain is an error, not a false result.
// On failure the witness is the first violating pair in lexicographic
// (x,y) order, as singleton sets, with deficiency = LHS − RHS.
CheckReport checkSufficient(const Graph& g, const VertexFunc& lo,
                            const VertexFunc& hi, const EdgeSubgraph& h);

}  // namespace gff

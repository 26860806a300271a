#pragma once

#include <optional>
#include <vector>

#include "gff/conditions.hpp"
#include "gff/graph.hpp"

namespace gff {

// Exact rational. Factor values only ever need denominator 1 or 2.
struct Rat {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num * b.den == b.num * a.den;
  }
};

// An edge-weight function h with every value in {0, 1/2, 1}, stored as 2h.
class FractionalFactor {
 public:
  FractionalFactor(const Graph& host, std::vector<int> twiceH);

  const Graph& host() const { return *host_; }
  int twice(int edgeId) const { return twice_.at(static_cast<size_t>(edgeId)); }
  Rat value(int edgeId) const;
  const std::vector<int>& twiceAll() const { return twice_; }

  // 2 * sum of h over edges at x.
  long long twiceDegree(Vertex x) const;
  // Edge ids of the support E_h.
  std::vector<int> support() const;

 private:
  const Graph* host_;
  std::vector<int> twice_;
};

// Either an explicit factor or a negative-deficiency witness, never both.
struct SolveOutcome {
  std::optional<FractionalFactor> factor;
  std::optional<Witness> witness;

  bool feasible() const { return factor.has_value(); }
};

// Decides existence of h with lo(x) <= sum_{e at x} h(e) <= hi(x) and
// produces one, or a minimal witness pair when none exists. Feasibility is
// decided by integral flow on the bipartite double cover; only the witness
// search is subject to enumeration guards.
SolveOutcome solveFractionalFactor(const Graph& g, const VertexFunc& lo,
                                   const VertexFunc& hi,
                                   const CheckOptions& opts = {});

// r'(x) = d_G(x) - r(x); errors when r exceeds a degree.
VertexFunc complementFunc(const Graph& g, const VertexFunc& r);

enum class IncludeRoute { Direct, Complement };

// Fractional r-factor with h(e)=1 forced on every edge of H.
// Direct: solve on G-E(H) with bounds r-d_H, set h=1 on E(H).
// Complement: solve a (d_G-r)-factor on G-E(H), map h -> 1-h, h=1 on E(H).
// Witnesses come from the minimal-pair search on the reduced instance
// (G-E(H), r-d_H); the same pair has equal deficiency in the
// all-factors sense on the original instance.
SolveOutcome solveIncluding(const Graph& g, const VertexFunc& r,
                            const EdgeSubgraph& h, IncludeRoute route,
                            const CheckOptions& opts = {});

// Independent constraint replay. Host mismatch is a caller bug and throws;
// constraint violations return false.
bool verifyFactor(const Graph& g, const VertexFunc& lo, const VertexFunc& hi,
                  const FractionalFactor& fac);
bool verifyFactorIncluding(const Graph& g, const VertexFunc& r,
                           const EdgeSubgraph& h, const FractionalFactor& fac);

}  // namespace gff

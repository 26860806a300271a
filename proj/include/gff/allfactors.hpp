#pragma once

#include <optional>
#include <vector>

#include "gff/conditions.hpp"
#include "gff/graph.hpp"

namespace gff {

struct BruteOptions {
  long long maxR = 1LL << 20;  // cap on box cardinality
  int maxN = 16;
  CheckOptions check;  // forwarded to witness searches and theorem checks
};

// Lexicographic cursor over all integer r with lo <= r <= hi pointwise.
class RFunctionSpace {
 public:
  RFunctionSpace(const VertexFunc& lo, const VertexFunc& hi);

  // Product of box widths, saturating at LLONG_MAX.
  long long cardinality() const { return card_; }
  bool exhausted() const { return done_; }
  const std::vector<int>& current() const;
  VertexFunc currentFunc() const;
  void advance();
  void reset();

 private:
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> cur_;
  long long card_ = 1;
  bool done_ = false;
};

// Definition-level check: a fractional r-factor including H must exist for
// every r in the box [lo, hi]. Reports the lexicographically first failing r.
CheckReport allFactorsBrute(const Graph& g, const VertexFunc& lo,
                            const VertexFunc& hi, const EdgeSubgraph& h,
                            const BruteOptions& opts = {});

// Outcome of pitting the brute-force definition against the pair-condition
// characterization (and its canonical specialization when E(H) is empty).
struct DiscrepancyReport {
  bool agree = true;
  bool bruteHolds = false;
  bool theoremHolds = false;
  std::optional<bool> canonicalHolds;  // only when E(H) is empty
  std::optional<VertexFunc> failingR;
  std::optional<Witness> bruteWitness;
  std::optional<Witness> theoremWitness;
  long long rExamined = 0;
  long long pairsExamined = 0;
};

DiscrepancyReport verifyEquivalence(const Graph& g, const VertexFunc& lo,
                                    const VertexFunc& hi, const EdgeSubgraph& h,
                                    const BruteOptions& opts = {});

}  // namespace gff

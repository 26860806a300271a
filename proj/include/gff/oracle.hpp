#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gff/allfactors.hpp"
#include "gff/graph.hpp"

namespace gff {

// SplitMix64 (Steele/Lea/Flood constants). Chosen as the project-wide
// generator because the stream is trivial to reproduce in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform on [0, bound) via rejection; exact, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Exact Bernoulli(num/den).
  bool chance(std::uint64_t num, std::uint64_t den);
  // Uniform integer in [lo, hi].
  int range(int lo, int hi);

 private:
  std::uint64_t state_;
};

// Sub-seed for stream index i of a master seed.
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index);

// Exact rational probability, num/den <= 1.
struct Prob {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

// Erdos-Renyi G(n, p): each pair {u,v}, u < v in lexicographic order, kept
// with probability p.
Graph randomGraph(int n, const Prob& p, std::uint64_t seed);

// How (g, f, H) are drawn for an instance.
//   Positive:  H empty, 1 <= g <= f <= max(d_G, 1)
//   Chain:     H random, d_H <= g <= f <= d_G
//   Saturated: H random, g = f = d_G (the pairwise sufficient condition
//              holds with equality, so soundness checks are never vacuous)
//   SmallBox:  H random, d_H <= g <= f <= d_G and f - g <= 1
//   Tight:     H random, g = f uniform in [d_H, d_G]
enum class BoundsRule { Positive, Chain, Saturated, SmallBox, Tight };

struct InstanceDraw {
  VertexFunc g;
  VertexFunc f;
  EdgeSubgraph h;
};

// Every draw satisfies its rule's bound chain; violation is an internal
// error, not a report.
InstanceDraw randomInstance(const Graph& g, BoundsRule rule, std::uint64_t seed);

inline constexpr const char* kCheckNames[] = {
    "thm1-thm2", "thm4-brute", "thm5-implies-thm4", "routes-agree",
    "cor6-specialization"};

struct SearchConfig {
  int nMin = 4;
  int nMax = 6;
  Prob p;
  long long trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  // Per-check defaults apply when unset: thm1-thm2 Positive, thm4-brute
  // SmallBox, routes-agree Tight, thm5/cor6 a Chain/Saturated mix.
  std::optional<BoundsRule> boundsRule;
  BruteOptions brute;
};

struct Discrepancy {
  std::string check;
  long long trial = 0;
  std::uint64_t subSeed = 0;
  int n = 0;
  std::string detail;
};

struct SearchSummary {
  long long trials = 0;  // trials consumed (== checked + skipped)
  long long checked = 0;
  long long skipped = 0;
  // Trials on which a sufficient-condition premise actually held; gauges
  // non-vacuity of the implication checks.
  long long premiseHeld = 0;
  std::optional<Discrepancy> discrepancy;
};

// Runs the selected cross-checks over the seeded instance stream and stops
// at the first discrepancy. A hit is a bug report against this
// implementation. Oversized instances (guard errors) count as skipped.
SearchSummary searchCounterexample(const SearchConfig& config);

}  // namespace gff

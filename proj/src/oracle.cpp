#include "gff/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gff/conditions.hpp"
#include "gff/solver.hpp"

namespace gff {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

bool SplitMix64::chance(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num > den) throw PreconditionError("probability outside [0,1]");
  return below(den) < num;
}

int SplitMix64::range(int lo, int hi) {
  if (lo > hi) throw PreconditionError("empty range");
  return lo + static_cast<int>(
                  below(static_cast<std::uint64_t>(hi) - lo + 1));
}

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)).next();
}

Graph randomGraph(int n, const Prob& p, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (p.den == 0 || p.num > p.den)
    throw PreconditionError("probability outside [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p.num, p.den)) edges.push_back({u, v});
  return Graph(n, edges);
}

InstanceDraw randomInstance(const Graph& g, BoundsRule rule,
                            std::uint64_t seed) {
  SplitMix64 rng(seed);
  int n = g.vertexCount();

  std::vector<int> hIdx;
  if (rule != BoundsRule::Positive)
    for (int id = 0; id < g.edgeCount(); ++id)
      if (rng.chance(1, 2)) hIdx.push_back(id);
  EdgeSubgraph h(g, std::move(hIdx));

  std::vector<int> gv(static_cast<size_t>(n)), fv(static_cast<size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    int dg = g.degree(x);
    int dh = h.degree(x);
    int& gx = gv[static_cast<size_t>(x)];
    int& fx = fv[static_cast<size_t>(x)];
    switch (rule) {
      case BoundsRule::Positive: {
        int cap = std::max(dg, 1);
        gx = rng.range(1, cap);
        fx = rng.range(gx, cap);
        break;
      }
      case BoundsRule::Chain:
        gx = rng.range(dh, dg);
        fx = rng.range(gx, dg);
        break;
      case BoundsRule::Saturated:
        gx = dg;
        fx = dg;
        break;
      case BoundsRule::SmallBox:
        gx = rng.range(dh, dg);
        fx = std::min(gx + rng.range(0, 1), dg);
        break;
      case BoundsRule::Tight:
        gx = rng.range(dh, dg);
        fx = gx;
        break;
    }
  }

  for (Vertex x = 0; x < n; ++x) {
    int gx = gv[static_cast<size_t>(x)], fx = fv[static_cast<size_t>(x)];
    bool ok = gx <= fx;
    if (rule == BoundsRule::Positive)
      ok = ok && 1 <= gx && fx <= std::max(g.degree(x), 1);
    else
      ok = ok && h.degree(x) <= gx && fx <= g.degree(x);
    if (!ok)
      throw Error("internal: generated bounds violate rule at vertex " +
                  std::to_string(x));
  }
  return {VertexFunc(std::move(gv), FuncRole::G),
          VertexFunc(std::move(fv), FuncRole::F), std::move(h)};
}

namespace {

bool knownCheck(const std::string& name) {
  for (const char* c : kCheckNames)
    if (name == c) return true;
  return false;
}

BoundsRule defaultRule(const std::string& check, long long trial) {
  if (check == "thm1-thm2") return BoundsRule::Positive;
  if (check == "thm4-brute") return BoundsRule::SmallBox;
  if (check == "routes-agree") return BoundsRule::Tight;
  return trial % 4 == 0 ? BoundsRule::Saturated : BoundsRule::Chain;
}

std::string verdictPair(bool a, bool b) {
  auto word = [](bool v) { return v ? std::string("holds") : std::string("fails"); };
  return word(a) + " vs " + word(b);
}

// nullopt = check passed; otherwise a one-line discrepancy description.
std::optional<std::string> runOne(const std::string& check, const Graph& g,
                                  const InstanceDraw& inst,
                                  const BruteOptions& brute,
                                  long long& premiseHeld) {
  CheckOptions pairOpts = brute.check;
  pairOpts.allowZero = true;

  if (check == "thm1-thm2") {
    CheckReport canon = checkExists(g, inst.g, inst.f, ExistsMode::Canonical, pairOpts);
    CheckReport full = checkExists(g, inst.g, inst.f, ExistsMode::Full, pairOpts);
    if (canon.holds != full.holds)
      return "canonical and full existence checks disagree: " +
             verdictPair(canon.holds, full.holds);
    if (!full.holds) {
      if (deficiencyFrac(g, inst.g, inst.f, full.witness->s, full.witness->t) !=
          full.witness->deficiency)
        return "full-mode witness fails replay";
      if (deficiencyFrac(g, inst.g, inst.f, canon.witness->s, canon.witness->t) !=
          canon.witness->deficiency)
        return "canonical-mode witness fails replay";
      if (canon.witness->deficiency >= 0 || full.witness->deficiency >= 0)
        return "witness deficiency not negative";
    }
    return std::nullopt;
  }

  if (check == "thm4-brute") {
    DiscrepancyReport rep = verifyEquivalence(g, inst.g, inst.f, inst.h, brute);
    if (!rep.agree)
      return "definition-level and pair-condition verdicts disagree: " +
             verdictPair(rep.bruteHolds, rep.theoremHolds);
    return std::nullopt;
  }

  if (check == "thm5-implies-thm4" || check == "cor6-specialization") {
    EdgeSubgraph empty(g, {});
    const EdgeSubgraph& sub = (check == "thm5-implies-thm4") ? inst.h : empty;
    CheckReport suff;
    try {
      suff = checkSufficient(g, inst.g, inst.f, sub);
    } catch (const PreconditionError&) {
      return std::nullopt;  // hypothesis chain does not apply; vacuous
    }
    if (suff.holds) {
      ++premiseHeld;
      CheckReport all =
          checkAllIncluding(g, inst.g, inst.f, sub, AllMode::Full, pairOpts);
      if (!all.holds)
        return "sufficient condition held yet a violating pair exists at "
               "deficiency " +
               std::to_string(all.witness->deficiency);
    }
    if (check == "cor6-specialization") {
      CheckReport full =
          checkAllIncluding(g, inst.g, inst.f, empty, AllMode::Full, pairOpts);
      CheckReport canon = checkAllIncluding(g, inst.g, inst.f, empty,
                                            AllMode::CanonicalNoH, pairOpts);
      if (full.holds != canon.holds)
        return "canonical specialization disagrees with full scan: " +
               verdictPair(canon.holds, full.holds);
    }
    return std::nullopt;
  }

  // routes-agree; instances are drawn with g = f = r.
  const VertexFunc& r = inst.g;
  SolveOutcome direct = solveIncluding(g, r, inst.h, IncludeRoute::Direct, pairOpts);
  SolveOutcome comp =
      solveIncluding(g, r, inst.h, IncludeRoute::Complement, pairOpts);
  if (direct.feasible() != comp.feasible())
    return "direct and complement routes disagree: " +
           verdictPair(direct.feasible(), comp.feasible());

  Graph reduced = removeEdges(g, inst.h);
  std::vector<int> rhVals(static_cast<size_t>(g.vertexCount()));
  for (Vertex x = 0; x < g.vertexCount(); ++x)
    rhVals[static_cast<size_t>(x)] = r(x) - inst.h.degree(x);
  VertexFunc rh(std::move(rhVals), FuncRole::Derived);
  SolveOutcome plain = solveFractionalFactor(reduced, rh, rh, pairOpts);
  if (plain.feasible() != direct.feasible())
    return "forced-subgraph solve disagrees with the reduced plain solve: " +
           verdictPair(direct.feasible(), plain.feasible());

  if (direct.feasible()) {
    if (!verifyFactorIncluding(g, r, inst.h, *direct.factor))
      return "direct-route factor fails constraint replay";
    if (!verifyFactorIncluding(g, r, inst.h, *comp.factor))
      return "complement-route factor fails constraint replay";
  } else {
    const Witness& w = *direct.witness;
    if (deficiencyAll(g, r, r, inst.h, w.s, w.t) != w.deficiency ||
        w.deficiency >= 0)
      return "infeasibility witness fails replay";
  }
  return std::nullopt;
}

}  // namespace

SearchSummary searchCounterexample(const SearchConfig& config) {
  if (config.nMin < 0 || config.nMin > config.nMax)
    throw PreconditionError("invalid vertex-count range");
  if (config.p.den == 0 || config.p.num > config.p.den)
    throw PreconditionError("probability outside [0,1]");
  if (config.trials < 0) throw PreconditionError("negative trial count");
  if (config.checks.empty()) throw PreconditionError("no checks selected");
  for (const std::string& c : config.checks)
    if (!knownCheck(c)) throw PreconditionError("unknown check: " + c);

  SearchSummary sum;
  for (long long trial = 0; trial < config.trials; ++trial) {
    std::uint64_t sub = deriveSeed(config.seed, static_cast<std::uint64_t>(trial));
    try {
      SplitMix64 meta(sub);
      int n = meta.range(config.nMin, config.nMax);
      Graph graph = randomGraph(n, config.p, meta.next());
      std::uint64_t instBase = meta.next();
      bool hit = false;
      for (size_t ci = 0; ci < config.checks.size(); ++ci) {
        const std::string& check = config.checks[ci];
        BoundsRule rule = config.boundsRule
                              ? *config.boundsRule
                              : defaultRule(check, trial);
        InstanceDraw inst =
            randomInstance(graph, rule, deriveSeed(instBase, ci));
        std::optional<std::string> bad =
            runOne(check, graph, inst, config.brute, sum.premiseHeld);
        if (bad) {
          sum.discrepancy = Discrepancy{check, trial, sub, n, *bad};
          hit = true;
          break;
        }
      }
      ++sum.checked;
      ++sum.trials;
      if (hit) return sum;
    } catch (const GuardError&) {
      ++sum.skipped;
      ++sum.trials;
    }
  }
  return sum;
}

}  // namespace gff

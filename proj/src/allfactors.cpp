#include "gff/allfactors.hpp"

#include <limits>
#include <string>
#include <utility>

#include "gff/solver.hpp"

namespace gff {

RFunctionSpace::RFunctionSpace(const VertexFunc& lo, const VertexFunc& hi) {
  if (lo.size() != hi.size())
    throw PreconditionError("bound functions differ in length");
  int n = lo.size();
  lo_.resize(static_cast<size_t>(n));
  hi_.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (lo(x) > hi(x))
      throw PreconditionError("g > f at vertex " + std::to_string(x));
    lo_[static_cast<size_t>(x)] = lo(x);
    hi_[static_cast<size_t>(x)] = hi(x);
    long long width = hi(x) - lo(x) + 1;
    if (card_ > std::numeric_limits<long long>::max() / width)
      card_ = std::numeric_limits<long long>::max();
    else
      card_ *= width;
  }
  reset();
}

void RFunctionSpace::reset() {
  cur_ = lo_;
  done_ = false;
}

const std::vector<int>& RFunctionSpace::current() const {
  if (done_) throw PreconditionError("cursor already exhausted");
  return cur_;
}

VertexFunc RFunctionSpace::currentFunc() const {
  return VertexFunc(current(), FuncRole::R);
}

void RFunctionSpace::advance() {
  if (done_) throw PreconditionError("cursor already exhausted");
  int i = static_cast<int>(cur_.size()) - 1;
  while (i >= 0 && cur_[static_cast<size_t>(i)] == hi_[static_cast<size_t>(i)]) {
    cur_[static_cast<size_t>(i)] = lo_[static_cast<size_t>(i)];
    --i;
  }
  if (i < 0)
    done_ = true;
  else
    ++cur_[static_cast<size_t>(i)];
}

namespace {

void requireBruteGuards(const Graph& g, const RFunctionSpace& space,
                        const BruteOptions& opts) {
  if (g.vertexCount() > opts.maxN)
    throw GuardError("vertex count " + std::to_string(g.vertexCount()) +
                     " exceeds the brute-force limit of " +
                     std::to_string(opts.maxN));
  if (space.cardinality() > opts.maxR)
    throw GuardError("r-function box has " +
                     std::to_string(space.cardinality()) +
                     " members, over the limit of " + std::to_string(opts.maxR));
}

}  // namespace

CheckReport allFactorsBrute(const Graph& g, const VertexFunc& lo,
                            const VertexFunc& hi, const EdgeSubgraph& h,
                            const BruteOptions& opts) {
  if (lo.size() != g.vertexCount() || hi.size() != g.vertexCount())
    throw PreconditionError("function length does not match vertex count");
  requireCompatible(g, h);
  RFunctionSpace space(lo, hi);
  requireBruteGuards(g, space, opts);

  // One reduction shared across the whole box; solve_including would
  // rebuild G - E(H) for every r.
  Graph reduced = removeEdges(g, h);

  CheckReport report;
  report.mode = "brute";
  for (; !space.exhausted(); space.advance()) {
    ++report.rExamined;
    const std::vector<int>& r = space.current();

    std::optional<Witness> bad;
    int degenerate = -1;
    for (int x = 0; x < g.vertexCount(); ++x)
      if (r[static_cast<size_t>(x)] < h.degree(x)) {
        degenerate = x;
        break;
      }
    if (degenerate >= 0) {
      bad = Witness{VertexSet({degenerate}), VertexSet(std::vector<Vertex>{}),
                    r[static_cast<size_t>(degenerate)] - h.degree(degenerate)};
    } else {
      std::vector<int> rhVals(static_cast<size_t>(g.vertexCount()));
      for (int x = 0; x < g.vertexCount(); ++x)
        rhVals[static_cast<size_t>(x)] = r[static_cast<size_t>(x)] - h.degree(x);
      VertexFunc rh(std::move(rhVals), FuncRole::Derived);
      SolveOutcome outcome =
          solveFractionalFactor(reduced, rh, rh, opts.check);
      if (!outcome.feasible()) bad = outcome.witness;
    }

    if (bad) {
      report.holds = false;
      report.witness = std::move(bad);
      report.failingR = space.currentFunc();
      return report;
    }
  }
  report.holds = true;
  return report;
}

DiscrepancyReport verifyEquivalence(const Graph& g, const VertexFunc& lo,
                                    const VertexFunc& hi, const EdgeSubgraph& h,
                                    const BruteOptions& opts) {
  CheckOptions pairOpts = opts.check;
  pairOpts.allowZero = true;  // brute definition has no positivity hypothesis

  CheckReport brute = allFactorsBrute(g, lo, hi, h, opts);
  CheckReport theorem = checkAllIncluding(g, lo, hi, h, AllMode::Full, pairOpts);

  DiscrepancyReport rep;
  rep.bruteHolds = brute.holds;
  rep.theoremHolds = theorem.holds;
  rep.failingR = brute.failingR;
  rep.bruteWitness = brute.witness;
  rep.theoremWitness = theorem.witness;
  rep.rExamined = brute.rExamined;
  rep.pairsExamined = theorem.pairsExamined;
  rep.agree = brute.holds == theorem.holds;

  if (h.edgeCount() == 0) {
    CheckReport canonical =
        checkAllIncluding(g, lo, hi, h, AllMode::CanonicalNoH, pairOpts);
    rep.canonicalHolds = canonical.holds;
    rep.pairsExamined += canonical.pairsExamined;
    rep.agree = rep.agree && canonical.holds == brute.holds;
  }
  return rep;
}

}  // namespace gff

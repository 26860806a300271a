#include <vector>

#include "doctest.h"

#include "gff/allfactors.hpp"
#include "gff/conditions.hpp"
#include "gff/graph.hpp"
#include "gff/oracle.hpp"
#include "gff/solver.hpp"
#include "helpers.hpp"

using namespace gff;
using namespace testutil;

TEST_CASE("r-function cursor enumerates the box in lexicographic order") {
  RFunctionSpace space(funcOf({1, 1}), funcOf({2, 2}));
  CHECK(space.cardinality() == 4);
  std::vector<std::vector<int>> seen;
  while (!space.exhausted()) {
    seen.push_back(space.current());
    space.advance();
  }
  std::vector<std::vector<int>> expect = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(seen == expect);
  CHECK_THROWS_AS(space.current(), PreconditionError);

  space.reset();
  CHECK(!space.exhausted());
  CHECK(space.current() == std::vector<int>{1, 1});

  RFunctionSpace one(funcOf({3, 1}), funcOf({3, 1}));
  CHECK(one.cardinality() == 1);
  CHECK(one.current() == std::vector<int>{3, 1});
  one.advance();
  CHECK(one.exhausted());

  RFunctionSpace mixed(funcOf({0, 1}), funcOf({1, 1}));
  CHECK(mixed.cardinality() == 2);
  CHECK(mixed.current() == std::vector<int>{0, 1});
  mixed.advance();
  CHECK(mixed.current() == std::vector<int>{1, 1});

  CHECK_THROWS_AS(RFunctionSpace(funcOf({2}), funcOf({1})), PreconditionError);
}

TEST_CASE("r-function cursor cardinality is the product of widths") {
  SplitMix64 rng(31);
  for (int inst = 0; inst < 20; ++inst) {
    int n = rng.range(1, 5);
    std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    long long expect = 1;
    for (int x = 0; x < n; ++x) {
      lo[static_cast<size_t>(x)] = rng.range(0, 2);
      hi[static_cast<size_t>(x)] = lo[static_cast<size_t>(x)] + rng.range(0, 2);
      expect *= hi[static_cast<size_t>(x)] - lo[static_cast<size_t>(x)] + 1;
    }
    RFunctionSpace space((VertexFunc(lo)), VertexFunc(hi));
    CHECK(space.cardinality() == expect);
    long long count = 0;
    std::vector<int> prev;
    while (!space.exhausted()) {
      if (count > 0) CHECK(prev < space.current());
      prev = space.current();
      ++count;
      space.advance();
    }
    CHECK(count == expect);
  }
}

TEST_CASE("brute-force box check on named instances") {
  Graph k2 = makeGraph(2, {{0, 1}});
  EdgeSubgraph none(k2, {});
  CheckReport ok = allFactorsBrute(k2, constFunc(2, 1), constFunc(2, 1), none);
  CHECK(ok.holds);
  CHECK(ok.rExamined == 1);
  CHECK(ok.mode == "brute");

  CheckReport bad = allFactorsBrute(k2, constFunc(2, 1), constFunc(2, 2), none);
  REQUIRE(!bad.holds);
  REQUIRE(bad.failingR.has_value());
  CHECK(bad.failingR->values() == std::vector<int>{1, 2});
  CHECK(bad.witness->s.members().empty());
  CHECK(bad.witness->t.members() == std::vector<Vertex>{1});
  CHECK(bad.witness->deficiency == -1);
  CHECK(bad.rExamined == 2);  // (1,1) passed, (1,2) failed

  Graph c4 = cycleGraph(4);
  EdgeSubgraph h(c4, {c4.findEdge(0, 1).value()});
  CheckReport withH = allFactorsBrute(c4, constFunc(4, 1), constFunc(4, 2), h);
  REQUIRE(!withH.holds);
  CHECK(withH.failingR->values() == std::vector<int>{1, 1, 1, 2});
  CHECK(withH.witness->s.members() == std::vector<Vertex>{0});
  CHECK(withH.witness->t.members() == std::vector<Vertex>{3});
  CHECK(withH.witness->deficiency == -1);
}

TEST_CASE("brute-force witnesses replay against the failing r") {
  SplitMix64 rng(32);
  int failures = 0;
  for (int inst = 0; inst < 60; ++inst) {
    int n = rng.range(2, 5);
    Graph g = randomGraph(n, {1, 2}, rng.next());
    InstanceDraw draw = randomInstance(g, BoundsRule::SmallBox, rng.next());
    BruteOptions opts;
    opts.check.allowZero = true;
    CheckReport rep = allFactorsBrute(g, draw.g, draw.f, draw.h, opts);
    if (rep.holds) continue;
    ++failures;
    REQUIRE(rep.failingR.has_value());
    const VertexFunc& r = *rep.failingR;
    bool degenerate = false;
    for (Vertex x = 0; x < n; ++x)
      if (r(x) < draw.h.degree(x)) degenerate = true;
    if (degenerate) {
      CHECK(rep.witness->t.members().empty());
      CHECK(rep.witness->deficiency < 0);
    } else {
      SolveOutcome out =
          solveIncluding(g, r, draw.h, IncludeRoute::Direct, opts.check);
      CHECK(!out.feasible());
      CHECK(deficiencyAll(g, r, r, draw.h, rep.witness->s, rep.witness->t) ==
            rep.witness->deficiency);
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("single-point boxes reduce to one solve") {
  SplitMix64 rng(33);
  for (int inst = 0; inst < 30; ++inst) {
    int n = rng.range(2, 6);
    Graph g = randomGraph(n, {1, 2}, rng.next());
    InstanceDraw draw = randomInstance(g, BoundsRule::Tight, rng.next());
    BruteOptions opts;
    opts.check.allowZero = true;
    CheckReport rep = allFactorsBrute(g, draw.g, draw.g, draw.h, opts);
    CHECK(rep.rExamined == 1);
    SolveOutcome out =
        solveIncluding(g, draw.g, draw.h, IncludeRoute::Direct, opts.check);
    CHECK(rep.holds == out.feasible());
  }
}

TEST_CASE("a holding box implies every single-point sub-box holds") {
  SplitMix64 rng(36);
  int wideHolds = 0;
  for (int inst = 0; inst < 40; ++inst) {
    int n = rng.range(2, 5);
    Graph g = randomGraph(n, {2, 3}, rng.next());
    InstanceDraw draw = randomInstance(g, BoundsRule::SmallBox, rng.next());
    BruteOptions opts;
    opts.check.allowZero = true;
    CheckReport wide = allFactorsBrute(g, draw.g, draw.f, draw.h, opts);
    CheckReport atLo = allFactorsBrute(g, draw.g, draw.g, draw.h, opts);
    CheckReport atHi = allFactorsBrute(g, draw.f, draw.f, draw.h, opts);
    if (wide.holds) {
      ++wideHolds;
      CHECK(atLo.holds);
      CHECK(atHi.holds);
    } else if (!atLo.holds) {
      // The lex-first failing r of the wide box is then its low corner.
      CHECK(wide.failingR->values() == draw.g.values());
    }
  }
  CHECK(wideHolds > 0);
}

TEST_CASE("verify_equivalence on named instances") {
  Graph k2 = makeGraph(2, {{0, 1}});
  EdgeSubgraph all(k2, {0});
  DiscrepancyReport rep =
      verifyEquivalence(k2, constFunc(2, 1), constFunc(2, 1), all);
  CHECK(rep.agree);
  CHECK(rep.bruteHolds);
  CHECK(rep.theoremHolds);
  CHECK(!rep.canonicalHolds.has_value());

  EdgeSubgraph none(k2, {});
  DiscrepancyReport neg =
      verifyEquivalence(k2, constFunc(2, 1), constFunc(2, 2), none);
  CHECK(neg.agree);
  CHECK(!neg.bruteHolds);
  CHECK(!neg.theoremHolds);
  REQUIRE(neg.canonicalHolds.has_value());
  CHECK(!*neg.canonicalHolds);
  CHECK(neg.failingR.has_value());
  CHECK(neg.bruteWitness.has_value());
  CHECK(neg.theoremWitness.has_value());

  Graph k4 = completeGraph(4);
  EdgeSubgraph k4None(k4, {});
  DiscrepancyReport pos =
      verifyEquivalence(k4, constFunc(4, 2), constFunc(4, 2), k4None);
  CHECK(pos.agree);
  CHECK(pos.bruteHolds);
  CHECK(pos.theoremHolds);
  CHECK(pos.canonicalHolds.has_value());
  CHECK(*pos.canonicalHolds);
  CHECK(pos.rExamined == 1);

  // Agreement with both sides false: the star has no r≡1 factor at all.
  Graph star = starGraph(3);
  EdgeSubgraph starNone(star, {});
  DiscrepancyReport bothFalse =
      verifyEquivalence(star, constFunc(4, 1), constFunc(4, 1), starNone);
  CHECK(bothFalse.agree);
  CHECK(!bothFalse.bruteHolds);
  CHECK(!bothFalse.theoremHolds);

  DiscrepancyReport wideBox =
      verifyEquivalence(k4, constFunc(4, 2), constFunc(4, 3), k4None);
  CHECK(wideBox.agree);
  CHECK(wideBox.rExamined <= 16);
}

TEST_CASE("equivalence holds across random instances") {
  SplitMix64 rng(34);
  int holdsSeen = 0, failsSeen = 0;
  for (int inst = 0; inst < 80; ++inst) {
    int n = rng.range(2, 5);
    Graph g = randomGraph(n, {1, 2}, rng.next());
    InstanceDraw draw = randomInstance(g, BoundsRule::SmallBox, rng.next());
    DiscrepancyReport rep = verifyEquivalence(g, draw.g, draw.f, draw.h);
    CHECK(rep.agree);
    (rep.bruteHolds ? holdsSeen : failsSeen) += 1;
    if (!rep.agree) break;
  }
  CHECK(holdsSeen > 0);
  CHECK(failsSeen > 0);
}

TEST_CASE("brute verdict matches the definition evaluated by hand") {
  SplitMix64 rng(35);
  for (int inst = 0; inst < 25; ++inst) {
    Graph g = maskGraph(3, rng.below(8));
    InstanceDraw draw = randomInstance(g, BoundsRule::SmallBox, rng.next());
    BruteOptions opts;
    opts.check.allowZero = true;
    CheckReport rep = allFactorsBrute(g, draw.g, draw.f, draw.h, opts);

    bool expect = true;
    RFunctionSpace space(draw.g, draw.f);
    while (!space.exhausted()) {
      if (!naiveIncludingExists(g, space.currentFunc(), draw.h)) {
        expect = false;
        break;
      }
      space.advance();
    }
    CHECK(rep.holds == expect);
  }
}

TEST_CASE("brute-force guards") {
  Graph big = makeGraph(17, {});
  EdgeSubgraph none(big, {});
  BruteOptions opts;
  opts.check.allowZero = true;
  CHECK_THROWS_AS(
      allFactorsBrute(big, constFunc(17, 0), constFunc(17, 0), none, opts),
      GuardError);

  Graph p2 = pathGraph(2);
  EdgeSubgraph pNone(p2, {});
  BruteOptions tight;
  tight.maxR = 3;
  tight.check.allowZero = true;
  CHECK_THROWS_AS(
      allFactorsBrute(p2, constFunc(2, 0), constFunc(2, 1), pNone, tight),
      GuardError);
}

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gff/allfactors.hpp"
#include "gff/conditions.hpp"
#include "gff/graph.hpp"
#include "gff/oracle.hpp"
#include "gff/report.hpp"
#include "gff/solver.hpp"

namespace {

using namespace gff;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long long elapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct IoOpts {
  bool json = false;
  std::string out;
};

int emit(const Report& rep, const IoOpts& io) {
  std::string text = io.json ? toJson(rep).dump(2) + "\n" : renderHuman(rep);
  if (!io.out.empty()) {
    std::ofstream f(io.out, std::ios::binary);
    if (!f) throw Error("cannot write file: " + io.out);
    f << text;
  } else {
    std::cout << text;
  }
  return exitCodeFor(rep.verdict);
}

struct FactorArgs {
  std::string graph, funcG, funcF, include, out;
  std::string method = "flow";
  long long maxPairs = 10'000'000;
  bool json = false;
};

int runFactor(const FactorArgs& a) {
  auto start = std::chrono::steady_clock::now();
  Graph g = parseGraph(readFile(a.graph));
  VertexFunc lo = parseVertexFunc(readFile(a.funcG), g, FuncRole::G);
  VertexFunc hi = parseVertexFunc(readFile(a.funcF), g, FuncRole::F);
  std::optional<EdgeSubgraph> h;
  if (!a.include.empty()) h = parseSubgraph(readFile(a.include), g);

  Report rep;
  rep.command = {{"name", "factor"},
                 {"graph", a.graph},
                 {"funcG", a.funcG},
                 {"funcF", a.funcF},
                 {"method", a.method},
                 {"maxPairs", a.maxPairs}};
  if (!a.include.empty()) rep.command["include"] = a.include;

  CheckOptions opts;
  opts.maxPairs = a.maxPairs;
  if (a.method == "flow") {
    SolveOutcome outcome;
    if (h) {
      if (!(lo == hi))
        throw PreconditionError(
            "--include requires g = f (a single forced r); pass the same "
            "function file for both");
      outcome = solveIncluding(g, lo, *h, IncludeRoute::Direct, opts);
    } else {
      outcome = solveFractionalFactor(g, lo, hi, opts);
    }
    rep.verdict = outcome.feasible() ? "feasible" : "infeasible";
    rep.factor = std::move(outcome.factor);
    rep.witness = std::move(outcome.witness);
  } else {
    if (h) throw PreconditionError("--include is only valid with --method flow");
    CheckReport cr = checkExists(
        g, lo, hi,
        a.method == "thm1" ? ExistsMode::Canonical : ExistsMode::Full, opts);
    rep.verdict = cr.holds ? "holds" : "fails";
    rep.witness = cr.witness;
    rep.stats["pairsExamined"] = cr.pairsExamined;
  }
  rep.stats["elapsedMs"] = elapsedMs(start);
  return emit(rep, {a.json, a.out});
}

struct AllArgs {
  std::string graph, funcG, funcF, include, out;
  std::string method = "thm4";
  bool json = false;
};

int runAll(const AllArgs& a) {
  auto start = std::chrono::steady_clock::now();
  Graph g = parseGraph(readFile(a.graph));
  VertexFunc lo = parseVertexFunc(readFile(a.funcG), g, FuncRole::G);
  VertexFunc hi = parseVertexFunc(readFile(a.funcF), g, FuncRole::F);
  EdgeSubgraph h = a.include.empty() ? EdgeSubgraph(g, {})
                                     : parseSubgraph(readFile(a.include), g);

  Report rep;
  rep.command = {{"name", "all"},
                 {"graph", a.graph},
                 {"funcG", a.funcG},
                 {"funcF", a.funcF},
                 {"method", a.method}};
  if (!a.include.empty()) rep.command["include"] = a.include;

  if (a.method == "thm4" || a.method == "thm3") {
    if (a.method == "thm3" && h.edgeCount() != 0)
      throw PreconditionError("--method thm3 requires an empty --include");
    CheckReport cr = checkAllIncluding(
        g, lo, hi, h,
        a.method == "thm4" ? AllMode::Full : AllMode::CanonicalNoH, {});
    rep.verdict = cr.holds ? "holds" : "fails";
    rep.witness = cr.witness;
    rep.stats["pairsExamined"] = cr.pairsExamined;
  } else if (a.method == "brute") {
    CheckReport cr = allFactorsBrute(g, lo, hi, h, {});
    rep.verdict = cr.holds ? "holds" : "fails";
    rep.witness = cr.witness;
    rep.failingR = cr.failingR;
    rep.stats["rExamined"] = cr.rExamined;
  } else {  // verify
    DiscrepancyReport dr = verifyEquivalence(g, lo, hi, h, {});
    rep.verdict = dr.agree ? "agree" : "disagree";
    rep.witness = dr.bruteWitness ? dr.bruteWitness : dr.theoremWitness;
    rep.failingR = dr.failingR;
    rep.stats["rExamined"] = dr.rExamined;
    rep.stats["pairsExamined"] = dr.pairsExamined;
    rep.stats["bruteHolds"] = dr.bruteHolds;
    rep.stats["theoremHolds"] = dr.theoremHolds;
    if (dr.canonicalHolds) rep.stats["canonicalHolds"] = *dr.canonicalHolds;
  }
  rep.stats["elapsedMs"] = elapsedMs(start);
  return emit(rep, {a.json, a.out});
}

struct SuffArgs {
  std::string graph, funcG, funcF, include, out;
  bool json = false;
};

int runSufficient(const SuffArgs& a) {
  auto start = std::chrono::steady_clock::now();
  Graph g = parseGraph(readFile(a.graph));
  VertexFunc lo = parseVertexFunc(readFile(a.funcG), g, FuncRole::G);
  VertexFunc hi = parseVertexFunc(readFile(a.funcF), g, FuncRole::F);
  EdgeSubgraph h = a.include.empty() ? EdgeSubgraph(g, {})
                                     : parseSubgraph(readFile(a.include), g);

  Report rep;
  rep.command = {{"name", "sufficient"},
                 {"graph", a.graph},
                 {"funcG", a.funcG},
                 {"funcF", a.funcF}};
  if (!a.include.empty()) rep.command["include"] = a.include;

  CheckReport cr = checkSufficient(g, lo, hi, h);
  rep.verdict = cr.holds ? "holds" : "fails";
  rep.witness = cr.witness;
  rep.stats["pairsExamined"] = cr.pairsExamined;
  rep.stats["elapsedMs"] = elapsedMs(start);
  return emit(rep, {a.json, a.out});
}

struct SearchArgs {
  int nMin = 4;
  int nMax = 6;
  std::string p = "1/2";
  long long trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  std::string out;
  bool json = false;
};

Prob parseProb(const std::string& text) {
  try {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return {std::stoull(text), 1};
    return {std::stoull(text.substr(0, slash)),
            std::stoull(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("bad probability: " + text + " (expected NUM/DEN)");
  }
}

int runSearch(const SearchArgs& a) {
  auto start = std::chrono::steady_clock::now();
  SearchConfig cfg;
  cfg.nMin = a.nMin;
  cfg.nMax = a.nMax;
  cfg.p = parseProb(a.p);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.checks = a.checks;

  Report rep;
  nlohmann::json checks = nlohmann::json::array();
  for (const std::string& c : a.checks) checks.push_back(c);
  rep.command = {{"name", "search"},
                 {"nMin", a.nMin},
                 {"nMax", a.nMax},
                 {"p", {{"num", cfg.p.num}, {"den", cfg.p.den}}},
                 {"trials", a.trials},
                 {"seed", std::to_string(a.seed)},
                 {"checks", checks}};

  SearchSummary sum = searchCounterexample(cfg);
  rep.verdict = sum.discrepancy ? "disagree" : "agree";
  rep.stats["trials"] = sum.trials;
  rep.stats["checked"] = sum.checked;
  rep.stats["skipped"] = sum.skipped;
  rep.stats["premiseHeld"] = sum.premiseHeld;
  if (sum.discrepancy) {
    const Discrepancy& d = *sum.discrepancy;
    rep.stats["discrepancy"] = {{"check", d.check},
                                {"trial", d.trial},
                                {"subSeed", std::to_string(d.subSeed)},
                                {"n", d.n},
                                {"detail", d.detail}};
  }
  rep.stats["elapsedMs"] = elapsedMs(start);
  return emit(rep, {a.json, a.out});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional (g,f)-factor toolkit"};
  app.require_subcommand(1);

  FactorArgs fa;
  AllArgs aa;
  SuffArgs sa;
  SearchArgs ra;

  CLI::App* factor = app.add_subcommand(
      "factor", "decide and construct a fractional (g,f)-factor");
  factor->add_option("--graph", fa.graph, "graph file")->required();
  factor->add_option("--func-g", fa.funcG, "lower-bound function file")->required();
  factor->add_option("--func-f", fa.funcF, "upper-bound function file")->required();
  factor->add_option("--include", fa.include,
                     "subgraph forced to h=1 (needs g=f and --method flow)");
  factor->add_option("--method", fa.method, "flow, thm1 or thm2")
      ->check(CLI::IsMember({"flow", "thm1", "thm2"}));
  factor->add_option("--max-pairs", fa.maxPairs, "witness enumeration guard");
  factor->add_flag("--json", fa.json, "machine-readable report");
  factor->add_option("--out", fa.out, "write the report to a file");

  CLI::App* all = app.add_subcommand(
      "all", "decide all fractional (g,f)-factors including a subgraph");
  all->add_option("--graph", aa.graph, "graph file")->required();
  all->add_option("--func-g", aa.funcG, "lower-bound function file")->required();
  all->add_option("--func-f", aa.funcF, "upper-bound function file")->required();
  all->add_option("--include", aa.include, "subgraph file");
  all->add_option("--method", aa.method, "thm4, thm3, brute or verify")
      ->check(CLI::IsMember({"thm4", "thm3", "brute", "verify"}));
  all->add_flag("--json", aa.json, "machine-readable report");
  all->add_option("--out", aa.out, "write the report to a file");

  CLI::App* suff = app.add_subcommand(
      "sufficient", "test the pairwise degree condition");
  suff->add_option("--graph", sa.graph, "graph file")->required();
  suff->add_option("--func-g", sa.funcG, "lower-bound function file")->required();
  suff->add_option("--func-f", sa.funcF, "upper-bound function file")->required();
  suff->add_option("--include", sa.include, "subgraph file");
  suff->add_flag("--json", sa.json, "machine-readable report");
  suff->add_option("--out", sa.out, "write the report to a file");

  CLI::App* search = app.add_subcommand(
      "search", "randomized cross-check search for discrepancies");
  search->add_option("--n-min", ra.nMin, "smallest vertex count");
  search->add_option("--n-max", ra.nMax, "largest vertex count");
  search->add_option("--p", ra.p, "edge probability NUM/DEN");
  search->add_option("--trials", ra.trials, "number of trials");
  search->add_option("--seed", ra.seed, "master seed");
  search->add_option("--checks", ra.checks, "comma-separated cross-checks")
      ->required()
      ->delimiter(',');
  search->add_flag("--json", ra.json, "machine-readable report");
  search->add_option("--out", ra.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*factor) return runFactor(fa);
    if (*all) return runAll(aa);
    if (*suff) return runSufficient(sa);
    return runSearch(ra);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

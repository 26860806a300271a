#include "gff/report.hpp"

#include <sstream>

namespace gff {

namespace {

nlohmann::json setJson(const VertexSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (Vertex x : s.members()) arr.push_back(x);
  return arr;
}

std::string setText(const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.members().size(); ++i) {
    if (i) out << ",";
    out << s.members()[i];
  }
  out << "}";
  return out.str();
}

std::string ratText(const Rat& r) {
  std::ostringstream out;
  out << r.num;
  if (r.den != 1) out << "/" << r.den;
  return out.str();
}

}  // namespace

nlohmann::json witnessJson(const Witness& w) {
  return {{"s", setJson(w.s)}, {"t", setJson(w.t)}, {"deficiency", w.deficiency}};
}

nlohmann::json factorJson(const FractionalFactor& fac) {
  nlohmann::json edges = nlohmann::json::array();
  const Graph& g = fac.host();
  for (int id = 0; id < g.edgeCount(); ++id) {
    Rat h = fac.value(id);
    edges.push_back({{"u", g.edge(id).u},
                     {"v", g.edge(id).v},
                     {"h", {{"num", h.num}, {"den", h.den}}}});
  }
  return {{"edges", edges}};
}

nlohmann::json toJson(const Report& rep) {
  nlohmann::json doc;
  doc["command"] = rep.command;
  doc["verdict"] = rep.verdict;
  if (rep.witness) doc["witness"] = witnessJson(*rep.witness);
  if (rep.factor) doc["factor"] = factorJson(*rep.factor);
  doc["stats"] = rep.stats;
  doc["toolVersion"] = kToolVersion;
  return doc;
}

std::string renderHuman(const Report& rep) {
  std::ostringstream out;
  out << "verdict: " << rep.verdict << "\n";
  if (rep.witness) {
    out << "witness: S=" << setText(rep.witness->s)
        << " T=" << setText(rep.witness->t)
        << " deficiency=" << rep.witness->deficiency << "\n";
  }
  if (rep.failingR) {
    out << "failing r:";
    for (int x = 0; x < rep.failingR->size(); ++x)
      out << " " << (*rep.failingR)(x);
    out << "\n";
  }
  if (rep.factor) {
    out << "factor:\n";
    const Graph& g = rep.factor->host();
    for (int id = 0; id < g.edgeCount(); ++id)
      out << "  h(" << g.edge(id).u << "," << g.edge(id).v
          << ") = " << ratText(rep.factor->value(id)) << "\n";
  }
  out << "stats:";
  for (auto it = rep.stats.begin(); it != rep.stats.end(); ++it)
    out << " " << it.key() << "="
        << (it.value().is_string() ? it.value().get<std::string>()
                                   : it.value().dump());
  out << "\n";
  return out.str();
}

int exitCodeFor(const std::string& verdict) {
  if (verdict == "feasible" || verdict == "holds" || verdict == "agree") return 0;
  if (verdict == "infeasible" || verdict == "fails" || verdict == "disagree")
    return 1;
  return 2;
}

}  // namespace gff

#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gff/conditions.hpp"
#include "gff/graph.hpp"
#include "gff/solver.hpp"

namespace gff {

inline constexpr const char* kToolVersion = "0.1.0";

// One report per invocation. Machine output carries at most the six
// sections command/verdict/witness/factor/stats/toolVersion; absent
// sections are omitted, never null.
struct Report {
  nlohmann::json command = nlohmann::json::object();
  std::string verdict;
  std::optional<Witness> witness;
  std::optional<FractionalFactor> factor;
  std::optional<VertexFunc> failingR;  // human-readable output only
  nlohmann::json stats = nlohmann::json::object();
};

nlohmann::json witnessJson(const Witness& w);
nlohmann::json factorJson(const FractionalFactor& fac);
nlohmann::json toJson(const Report& rep);

std::string renderHuman(const Report& rep);

// 0 feasible/holds/agree, 1 infeasible/fails/disagree, 2 error.
int exitCodeFor(const std::string& verdict);

}  // namespace gff

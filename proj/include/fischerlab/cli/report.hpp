#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fischerlab/cli/config.hpp"
#include "fischerlab/dirichlet/solver.hpp"
#include "fischerlab/fischer/decomposition.hpp"
#include "fischerlab/fischer/fischer_theorem.hpp"
#include "fischerlab/fischer/rank_profile.hpp"

namespace fischerlab::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

using nlohmann::json;

/// {"tool_version", "command", "config", "result", "checks"}.
json report_envelope(std::string_view command, const RunConfig& config, json result,
                     json checks);

json config_to_json(const RunConfig& config);
/// {"text": "...", "poly": <poly schema>}.
json poly_entry(const Poly& p, const std::vector<std::string>& vars);

std::string_view verdict_name(VerdictKind kind);

json to_json(const DecompositionCertificate& cert, const std::vector<std::string>& vars);
json to_json(const RankProfile& profile, const std::vector<std::string>& vars);
json to_json(const FischerTheoremReport& report, const std::vector<std::string>& vars);
json to_json(const DirichletSolution& sol, const std::vector<std::string>& vars);
json to_json(const KsResidual& res, const std::vector<std::string>& vars);

}  // namespace fischerlab::cli

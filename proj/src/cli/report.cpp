#include "fischerlab/cli/report.hpp"

#include "fischerlab/cli/expr.hpp"
#include "fischerlab/polyring/poly_json.hpp"

namespace fischerlab::cli {

json report_envelope(std::string_view command, const RunConfig& config, json result,
                     json checks) {
  return {{"tool_version", kToolVersion},
          {"command", command},
          {"config", config_to_json(config)},
          {"result", std::move(result)},
          {"checks", std::move(checks)}};
}

json config_to_json(const RunConfig& config) {
  return {{"field", field_name(config.field)},
          {"vars", config.vars},
          {"max_degree", config.max_degree},
          {"slack", config.slack},
          {"tol_root", config.tol_root},
          {"tol_boundary", config.tol_boundary},
          {"seed", config.seed},
          {"format", format_name(config.output)}};
}

json poly_entry(const Poly& p, const std::vector<std::string>& vars) {
  return {{"text", format_polynomial(p, vars)}, {"poly", poly_to_json(p)}};
}

std::string_view verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::SurjectiveWithSlack: return "SURJECTIVE_WITH_SLACK";
    case VerdictKind::Undetermined: return "UNDETERMINED";
    case VerdictKind::NotSurjective: return "NOT_SURJECTIVE";
  }
  return "UNDETERMINED";
}

json to_json(const DecompositionCertificate& cert, const std::vector<std::string>& vars) {
  return {{"status", "DECOMPOSED"},
          {"psi", poly_entry(cert.psi, vars)},
          {"f", poly_entry(cert.f, vars)},
          {"q", poly_entry(cert.q, vars)},
          {"h", poly_entry(cert.h, vars)},
          {"slack_used", cert.slack_used},
          {"source_degree", cert.source_degree}};
}

json to_json(const RankProfile& profile, const std::vector<std::string>& vars) {
  json rows = json::array();
  for (const auto& r : profile.rows)
    rows.push_back({{"target_degree", r.target_degree},
                    {"source_degree", r.source_degree},
                    {"dim_source", r.dim_source},
                    {"dim_target", r.dim_target},
                    {"rank", r.rank},
                    {"surjective_onto_target", r.surjective_onto_target}});
  json verdicts = json::array();
  for (const auto& v : profile.verdicts) {
    json entry = {{"target_degree", v.target_degree},
                  {"verdict", verdict_name(v.kind)},
                  {"slack", v.slack}};
    entry["witness"] = v.witness ? poly_entry(*v.witness, vars) : json(nullptr);
    verdicts.push_back(std::move(entry));
  }
  return {{"psi", poly_entry(profile.psi, vars)},
          {"mode", profile.mode == ProfileMode::Homogeneous ? "homogeneous" : "filtered"},
          {"max_target_degree", profile.max_target_degree},
          {"max_slack", profile.max_slack},
          {"rows", std::move(rows)},
          {"verdicts", std::move(verdicts)}};
}

json to_json(const FischerTheoremReport& report, const std::vector<std::string>& vars) {
  json slices = json::array();
  for (const auto& s : report.slices)
    slices.push_back({{"degree", s.degree},
                      {"dim", s.dim},
                      {"rank", s.rank},
                      {"nonsingular", s.nonsingular}});
  return {{"p", poly_entry(report.p, vars)}, {"slices", std::move(slices)}};
}

json to_json(const DirichletSolution& sol, const std::vector<std::string>& vars) {
  const auto& v = sol.verification;
  return {{"psi", poly_entry(sol.domain.psi(), vars)},
          {"interior_point", sol.domain.interior_point()},
          {"ellipsoidal", sol.domain.is_ellipsoidal()},
          {"f", poly_entry(sol.f, vars)},
          {"h", poly_entry(sol.h, vars)},
          {"q", poly_entry(sol.q, vars)},
          {"verification",
           {{"harmonic_exact", v.harmonic_exact},
            {"identity_exact", v.identity_exact},
            {"boundary_max_error", v.boundary_max_error},
            {"samples", v.samples},
            {"tolerance", v.tolerance},
            {"passed", v.passed}}}};
}

json to_json(const KsResidual& res, const std::vector<std::string>& vars) {
  json factor = nullptr;
  if (res.factor) factor = {{"text", format_scalar(*res.factor)}, {"value", scalar_to_json(*res.factor)}};
  return {{"psi", poly_entry(res.solution.domain.psi(), vars)},
          {"h", poly_entry(res.solution.h, vars)},
          {"Q", poly_entry(res.q_residual, vars)},
          {"proportional_to_psi", res.proportional_to_psi},
          {"factor", std::move(factor)}};
}

}  // namespace fischerlab::cli

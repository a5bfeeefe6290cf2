#include "fischerlab/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "fischerlab/cli/config.hpp"
#include "fischerlab/cli/expr.hpp"
#include "fischerlab/cli/report.hpp"
#include "fischerlab/dirichlet/solver.hpp"
#include "fischerlab/error.hpp"
#include "fischerlab/fischer/decomposition.hpp"
#include "fischerlab/fischer/fischer_theorem.hpp"
#include "fischerlab/fischer/khavinson.hpp"
#include "fischerlab/fischer/rank_profile.hpp"

namespace fischerlab::cli {

namespace {

// What a subcommand produced: the report and the exit code it maps to.
struct Outcome {
  json result;
  json checks = json::object();
  int code = kExitOk;
  std::string text;  // human-readable rendering
  std::string csv;
};

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> point;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw InvalidArgument("malformed coordinate '" + item + "' in --interior");
    point.push_back(v);
  }
  return point;
}

std::string profile_text(const RankProfile& profile, const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << "psi = " << format_polynomial(profile.psi, vars) << "\n";
  os << "mode = " << (profile.mode == ProfileMode::Homogeneous ? "homogeneous" : "filtered")
     << "\n";
  for (const auto& r : profile.rows)
    os << "  target " << r.target_degree << " <- source " << r.source_degree << ": rank "
       << r.rank << " / " << r.dim_target << " (dim source " << r.dim_source << ")"
       << (r.surjective_onto_target ? " surjective" : "") << "\n";
  for (const auto& v : profile.verdicts) {
    os << "degree " << v.target_degree << ": " << verdict_name(v.kind);
    if (v.kind == VerdictKind::SurjectiveWithSlack) os << " " << v.slack;
    if (v.witness) os << " witness " << format_polynomial(*v.witness, vars);
    os << "\n";
  }
  return os.str();
}

std::string profile_csv(const RankProfile& profile) {
  std::ostringstream os;
  os << "target_degree,source_degree,dim_source,dim_target,rank,surjective_onto_target\n";
  for (const auto& r : profile.rows)
    os << r.target_degree << "," << r.source_degree << "," << r.dim_source << ","
       << r.dim_target << "," << r.rank << "," << (r.surjective_onto_target ? 1 : 0) << "\n";
  return os.str();
}

Outcome profile_outcome(const RankProfile& profile, const std::vector<std::string>& vars) {
  Outcome o;
  o.result = to_json(profile, vars);
  bool undetermined = false, negative = false;
  for (const auto& v : profile.verdicts) {
    undetermined |= v.kind == VerdictKind::Undetermined;
    negative |= v.kind == VerdictKind::NotSurjective;
  }
  o.checks = {{"all_surjective", profile.all_surjective()}};
  o.code = undetermined ? kExitUndetermined : negative ? kExitVerificationFailed : kExitOk;
  o.text = profile_text(profile, vars);
  o.csv = profile_csv(profile);
  return o;
}

std::string key_value_csv(const json& result) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [key, value] : result.items()) {
    if (value.is_object() && value.contains("text")) os << key << ",\"" << value["text"].get<std::string>() << "\"\n";
    else if (!value.is_object() && !value.is_array()) os << key << "," << value.dump() << "\n";
  }
  return os.str();
}

QuadricDomain make_domain(const Poly& psi, const std::string& interior) {
  return QuadricDomain(psi, parse_point(interior));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fischer operators, Fischer decompositions and polynomial Dirichlet "
               "solutions on quadrics",
               "fischerlab"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string vars_text, field_text = "Q", format_text = "text", out_path;
  std::optional<std::uint64_t> seed;
  RunConfig config;
  app.add_option("--vars", vars_text, "Comma-separated variable names (defines arity and order)");
  app.add_option("--field", field_text, "Coefficient field: Q or Qi");
  app.add_option("--format", format_text, "Output format: text, json or csv");
  app.add_option("--seed", seed, "Seed for boundary sampling (overrides FISCHERLAB_SEED)");
  app.add_option("--tol-root", config.tol_root, "Boundary root tolerance on |psi|");
  app.add_option("--tol-boundary", config.tol_boundary, "Boundary agreement tolerance");
  app.add_option("--out", out_path, "Write the report to FILE");

  std::string psi_text, f_text, p_text, interior_text, phi_text, mode_text = "filtered";
  int slack = 0, khavinson_slack = 4, max_degree = 0, samples = 100;

  auto* decompose = app.add_subcommand("decompose", "Fischer decomposition f = psi q + h");
  decompose->add_option("--psi", psi_text)->required();
  decompose->add_option("--f", f_text)->required();
  decompose->add_option("--slack", slack);

  auto* profile = app.add_subcommand("rank-profile", "Degree-wise surjectivity of F_psi");
  profile->add_option("--psi", psi_text)->required();
  profile->add_option("--max-degree", max_degree)->required();
  profile->add_option("--slack", slack);
  profile->add_option("--mode", mode_text)->check(CLI::IsMember({"homogeneous", "filtered"}));

  auto* dirichlet = app.add_subcommand("dirichlet", "Polynomial Dirichlet problem on a quadric");
  dirichlet->add_option("--psi", psi_text)->required();
  dirichlet->add_option("--f", f_text)->required();
  dirichlet->add_option("--interior", interior_text)->required();
  dirichlet->add_option("--samples", samples);

  auto* theorem = app.add_subcommand("fischer-theorem", "Bijectivity of q -> P(D)(P q)");
  theorem->add_option("--p", p_text)->required();
  theorem->add_option("--max-degree", max_degree)->required();

  auto* khavinson = app.add_subcommand("khavinson", "Rank profile of psi = (x3 - phi(x1 + i x2))^2");
  khavinson->add_option("--phi", phi_text, "Coefficients a0,a1,...,an of phi")->required();
  khavinson->add_option("--max-degree", max_degree)->required();
  khavinson->add_option("--slack", khavinson_slack);

  auto* residual = app.add_subcommand("ks-residual", "Q = |x|^2 - h on an ellipsoid");
  residual->add_option("--psi", psi_text)->required();
  residual->add_option("--interior", interior_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Outcome outcome;
  std::string command;
  try {
    config.field = parse_field(field_text);
    config.output = parse_output_format(format_text);
    if (seed) {
      config.seed = *seed;
    } else if (const char* env = std::getenv("FISCHERLAB_SEED")) {
      try {
        config.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw InvalidArgument(std::string("FISCHERLAB_SEED is not an unsigned integer: ") + env);
      }
    }
    config.max_degree = max_degree;
    config.slack = khavinson->parsed() ? khavinson_slack : slack;

    if (khavinson->parsed()) {
      config.field = Field::Qi;
      if (vars_text.empty()) vars_text = "x,y,z";
    }
    config.vars = vars_text.empty() ? std::vector<std::string>{} : split_list(vars_text);
    config.validate();
    const auto& vars = config.vars;

    if (decompose->parsed()) {
      command = "decompose";
      const Poly psi = parse_polynomial(psi_text, config);
      const Poly f = parse_polynomial(f_text, config);
      try {
        const auto cert = fischer_decompose(psi, f, config.slack);
        outcome.result = to_json(cert, vars);
        outcome.checks = {{"identity_exact", cert.identity_exact},
                          {"h_harmonic_exact", cert.h_harmonic_exact}};
        outcome.code = cert.verified() ? kExitOk : kExitVerificationFailed;
        outcome.text = "q = " + format_polynomial(cert.q, vars) + "\nh = " +
                       format_polynomial(cert.h, vars) + "\nidentity_exact = " +
                       (cert.identity_exact ? "true" : "false") + "\nh_harmonic_exact = " +
                       (cert.h_harmonic_exact ? "true" : "false") + "\n";
      } catch (const NoDecompositionFound& e) {
        outcome.result = {{"status", "UNDETERMINED"},
                          {"psi", poly_entry(psi, vars)},
                          {"f", poly_entry(f, vars)},
                          {"slack", e.slack()}};
        outcome.code = kExitUndetermined;
        outcome.text = std::string("UNDETERMINED: ") + e.what() + "\n";
      }
      outcome.csv = key_value_csv(outcome.result);
    } else if (profile->parsed()) {
      command = "rank-profile";
      const Poly psi = parse_polynomial(psi_text, config);
      const auto mode = mode_text == "homogeneous" ? ProfileMode::Homogeneous : ProfileMode::Filtered;
      outcome = profile_outcome(rank_profile(psi, config.max_degree, config.slack, mode), vars);
    } else if (khavinson->parsed()) {
      command = "khavinson";
      if (vars.size() != 3) throw InvalidArgument("khavinson works in three variables");
      std::vector<Scalar> coeffs;
      for (const auto& item : split_list(phi_text)) {
        const Poly c = parse_polynomial(item, config);
        if (c.degree() > 0) throw InvalidArgument("phi coefficients must be constants");
        coeffs.push_back(c.constant_term());
      }
      const Poly psi = khavinson_psi(coeffs);
      outcome = profile_outcome(rank_profile(psi, config.max_degree, config.slack,
                                             ProfileMode::Filtered),
                                vars);
    } else if (theorem->parsed()) {
      command = "fischer-theorem";
      const auto report = fischer_theorem_check(parse_polynomial(p_text, config), config.max_degree);
      outcome.result = to_json(report, vars);
      outcome.checks = {{"all_nonsingular", report.all_nonsingular()}};
      outcome.code = report.all_nonsingular() ? kExitOk : kExitVerificationFailed;
      std::ostringstream text, csv;
      csv << "degree,dim,rank,nonsingular\n";
      for (const auto& s : report.slices) {
        text << "degree " << s.degree << ": rank " << s.rank << " / " << s.dim
             << (s.nonsingular ? " nonsingular" : " SINGULAR") << "\n";
        csv << s.degree << "," << s.dim << "," << s.rank << "," << (s.nonsingular ? 1 : 0) << "\n";
      }
      outcome.text = text.str();
      outcome.csv = csv.str();
    } else if (dirichlet->parsed()) {
      command = "dirichlet";
      if (config.field != Field::Q) throw InvalidArgument("dirichlet requires --field Q");
      if (samples < 1) throw InvalidArgument("--samples must be >= 1");
      const QuadricDomain domain = make_domain(parse_polynomial(psi_text, config), interior_text);
      const Poly f = parse_polynomial(f_text, config);
      SampleRng rng(config.seed);
      const auto sol = dirichlet_solve(domain, f, rng, samples, config.tol_root, config.tol_boundary);
      const auto& v = sol.verification;
      outcome.result = to_json(sol, vars);
      outcome.checks = {{"harmonic_exact", v.harmonic_exact},
                        {"identity_exact", v.identity_exact},
                        {"boundary_agreement", v.boundary_max_error < v.tolerance}};
      outcome.code = v.passed ? kExitOk : kExitVerificationFailed;
      outcome.text = "h = " + format_polynomial(sol.h, vars) + "\nq = " +
                     format_polynomial(sol.q, vars) + "\nharmonic_exact = " +
                     (v.harmonic_exact ? "true" : "false") + "\nidentity_exact = " +
                     (v.identity_exact ? "true" : "false") + "\nboundary_max_error = " +
                     fmt_double(v.boundary_max_error) + " over " + std::to_string(v.samples) +
                     " samples\n" + (v.passed ? "verified\n" : "VERIFICATION FAILED\n");
      std::ostringstream csv;
      for (const auto& name : vars) csv << name << ",";
      csv << "psi,f_minus_h\n";
      for (const auto& s : v.log) {
        for (double x : s.point) csv << fmt_double(x) << ",";
        csv << fmt_double(s.psi_value) << "," << fmt_double(s.residual) << "\n";
      }
      outcome.csv = csv.str();
    } else if (residual->parsed()) {
      command = "ks-residual";
      if (config.field != Field::Q) throw InvalidArgument("ks-residual requires --field Q");
      const QuadricDomain domain = make_domain(parse_polynomial(psi_text, config), interior_text);
      const auto res = ks_residual(domain);
      outcome.result = to_json(res, vars);
      outcome.checks = {{"proportional_to_psi", res.proportional_to_psi}};
      outcome.code = res.proportional_to_psi ? kExitOk : kExitVerificationFailed;
      outcome.text = "Q = " + format_polynomial(res.q_residual, vars) +
                     "\nproportional_to_psi = " + (res.proportional_to_psi ? "true" : "false") +
                     (res.factor ? "\nfactor = " + format_scalar(*res.factor) : std::string()) +
                     "\n";
      outcome.csv = key_value_csv(outcome.result);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArityMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  std::string rendered;
  switch (config.output) {
    case OutputFormat::Json:
      rendered = report_envelope(command, config, outcome.result, outcome.checks).dump(2) + "\n";
      break;
    case OutputFormat::Csv:
      rendered = outcome.csv;
      break;
    case OutputFormat::Text:
      rendered = outcome.text;
      break;
  }
  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    file << rendered;
  }
  if (outcome.code == kExitUndetermined) err << "result: UNDETERMINED\n";
  return outcome.code;
}

}  // namespace fischerlab::cli

// Copyright 2026 The alphageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string_view>

#include <CLI/CLI11.hpp>

#include "alphageo/alphageo.hpp"
#include "suites.hpp"

namespace alphageo::cli {

using nlohmann::json;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  json diagnostics = json::array();
};

// The report keys are written in sorted order, so wall_time always comes
// last and everything before it is reproducible byte for byte.
void emit(std::ostream& out, const Report& report, double seconds) {
  json j = {{"command", report.command},
            {"inputs", report.inputs},
            {"outputs", report.outputs},
            {"diagnostics", report.diagnostics},
            {"wall_time", seconds}};
  out << io::dump(j) << '\n';
}

Alpha make_alpha(double value, bool relaxed) {
  return relaxed ? Alpha::relaxed(value) : Alpha(value);
}

FiniteDistribution load_distribution(const std::string& path) {
  return io::distribution_from_json(io::read_json_file(path));
}

/// A plain array of numbers, or the mass vector of a distribution object.
std::vector<double> load_vector(const std::string& path) {
  const json j = io::read_json_file(path);
  if (j.is_array()) {
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number()) {
        throw Error(ErrorCode::ParseError,
                    "field '[" + std::to_string(i) + "]': expected a number");
      }
      out.push_back(j[i].get<double>());
    }
    return out;
  }
  const auto p = io::distribution_from_json(j);
  return {p.mass().begin(), p.mass().end()};
}

json value_json(const DivergenceValue& v) { return io::to_json(v); }

// divergence ----------------------------------------------------------------

struct DivergenceArgs {
  std::string kind;
  double alpha = 0.5;
  bool alpha_given = false;
  bool relaxed = false;
  bool gap = false;
  std::string p_file;
  std::string q_file;
};

int cmd_divergence(const DivergenceArgs& a, Report& report) {
  report.inputs["kind"] = a.kind;
  if (a.kind == "l-alpha") {
    const auto f = load_vector(a.p_file);
    const auto g = load_vector(a.q_file);
    const auto alpha = make_alpha(a.alpha, a.relaxed);
    report.inputs["f"] = f;
    report.inputs["g"] = g;
    report.inputs["alpha"] = alpha.value();
    report.outputs["value"] = l_alpha_distance(f, g, alpha);
    return kOk;
  }

  const auto kind = parse_divergence_kind(a.kind);
  const auto p = load_distribution(a.p_file);
  const auto q = load_distribution(a.q_file);
  require_same_labels(p, q);
  report.inputs["p"] = io::to_json(p);
  report.inputs["q"] = io::to_json(q);

  Alpha alpha = Alpha::relaxed(1.0);
  if (kind != DivergenceKind::KL) {
    if (!a.alpha_given) {
      throw Error(ErrorCode::InvalidAlpha, "--alpha is required for " + a.kind);
    }
    alpha = make_alpha(a.alpha, a.relaxed);
    report.inputs["alpha"] = alpha.value();
  }
  const auto value = divergence(kind, p, q, alpha);
  report.outputs["value"] = value_json(value);

  if (a.gap) {
    if (kind != DivergenceKind::IAlpha) {
      throw Error(ErrorCode::InvalidArgument,
                  "--gap applies to kind i-alpha only");
    }
    report.outputs["correspondence_gap"] = correspondence_gap(p, q, alpha);
  }
  return value.is_infinite() ? kInfinite : kOk;
}

// escort --------------------------------------------------------------------

struct EscortArgs {
  double alpha = 2.0;
  bool inverse = false;
  std::string p_file;
};

int cmd_escort(const EscortArgs& a, Report& report) {
  const Alpha alpha(a.alpha);
  const auto p = load_distribution(a.p_file);
  report.inputs["p"] = io::to_json(p);
  report.inputs["alpha"] = alpha.value();
  report.inputs["inverse"] = a.inverse;
  const auto image = a.inverse ? escort_inverse(p, alpha) : escort(p, alpha);
  report.outputs["distribution"] = io::to_json(image);
  report.outputs["pseudo_norm"] = alpha_pseudo_norm(p, alpha);
  return kOk;
}

// mixture -------------------------------------------------------------------

struct MixtureArgs {
  double alpha = 2.0;
  double lambda = 0.5;
  bool relaxed = false;
  std::optional<double> norm0;
  std::optional<double> norm1;
  std::vector<std::string> files;
};

int cmd_mixture(const MixtureArgs& a, Report& report) {
  const MixtureWeight w(a.lambda);
  report.inputs["lambda"] = w.value();
  if (a.norm0 || a.norm1) {
    if (!(a.norm0 && a.norm1) || !a.files.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "--norm0 and --norm1 go together and replace the files");
    }
    report.inputs["norm0"] = *a.norm0;
    report.inputs["norm1"] = *a.norm1;
    report.outputs["lambda_prime"] =
        mixture_weight_transform(w, *a.norm0, *a.norm1).value();
    return kOk;
  }
  if (a.files.size() != 2) {
    throw Error(ErrorCode::InvalidArgument,
                "mixture needs two distribution files or --norm0/--norm1");
  }
  const auto p0 = load_distribution(a.files[0]);
  const auto p1 = load_distribution(a.files[1]);
  require_same_labels(p0, p1);
  const auto alpha = make_alpha(a.alpha, a.relaxed);
  report.inputs["p0"] = io::to_json(p0);
  report.inputs["p1"] = io::to_json(p1);
  report.inputs["alpha"] = alpha.value();

  report.outputs["mixture"] = io::to_json(alpha_lambda_mixture(p0, p1, alpha, w));
  report.outputs["normalizer"] = mixture_normalizer(p0, p1, alpha, w);
  const double n0 = alpha_pseudo_norm(p0, alpha);
  const double n1 = alpha_pseudo_norm(p1, alpha);
  report.outputs["norm0"] = n0;
  report.outputs["norm1"] = n1;
  report.outputs["lambda_prime"] = mixture_weight_transform(w, n0, n1).value();
  report.outputs["lambda_double_prime"] =
      mixture_weight_transform(w, n1, n0).value();
  return kOk;
}

// family --------------------------------------------------------------------

struct FamilyArgs {
  std::string spec_file;
  bool transform = false;
  std::string residual_file;
  std::string constraints_file;
  std::optional<double> alpha;
  std::optional<std::string> alpha_exp;
};

int cmd_family(const FamilyArgs& a, Report& report) {
  const int modes = int{!a.spec_file.empty()} + int{!a.residual_file.empty()} +
                    int{a.alpha_exp.has_value()};
  if (modes != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "choose exactly one of --spec, --residual, --alpha-exp");
  }

  if (a.alpha_exp) {
    if (!a.alpha) {
      throw Error(ErrorCode::InvalidAlpha, "--alpha is required");
    }
    const Alpha alpha(*a.alpha);
    double u = 0.0;
    try {
      std::size_t used = 0;
      u = std::stod(*a.alpha_exp, &used);
      if (used != a.alpha_exp->size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError,
                  "field 'alpha-exp': expected a number, got '" +
                      *a.alpha_exp + "'");
    }
    report.inputs["u"] = u;
    report.inputs["alpha"] = alpha.value();
    report.outputs["value"] = alpha_exp(u, alpha);
    return kOk;
  }

  if (!a.residual_file.empty()) {
    if (a.constraints_file.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--residual needs --constraints");
    }
    const auto p = load_distribution(a.residual_file);
    const auto family = io::family_from_json(io::read_json_file(a.constraints_file));
    report.inputs["p"] = io::to_json(p);
    report.inputs["family"] = io::to_json(family);
    Eigen::VectorXd residual;
    if (a.alpha) {
      const Alpha alpha(*a.alpha);
      report.inputs["alpha"] = alpha.value();
      residual = alpha_linear_residual(p, family, alpha);
    } else {
      residual = family_residual(p, family);
    }
    report.outputs["residual"] = io::vector_to_json(residual);
    return kOk;
  }

  const auto spec = io::family_spec_from_json(io::read_json_file(a.spec_file));
  report.inputs["spec"] = io::to_json(spec);
  const auto member = family_member(spec);
  report.outputs["member"] = io::to_json(member.distribution);
  report.outputs["normalizer"] = member.normalizer;
  if (a.transform) {
    if (spec.kind != FamilyKind::PowerLaw) {
      throw Error(ErrorCode::InvalidArgument,
                  "--transform applies to power-law specs");
    }
    const auto theta = theta_transform(spec.theta, spec.generator, spec.alpha);
    const FamilySpec image{escort(spec.generator, spec.alpha), spec.functions,
                           theta, spec.alpha.reciprocal(),
                           FamilyKind::Exponential};
    const auto expo = exponential_member(image);
    const auto escorted = escort(member.distribution, spec.alpha);
    double deviation = 0.0;
    for (std::size_t i = 0; i < escorted.size(); ++i) {
      deviation = std::max(deviation,
                           std::abs(escorted[i] - expo.distribution[i]));
    }
    report.outputs["theta_prime"] = io::vector_to_json(theta);
    report.outputs["escort_member"] = io::to_json(escorted);
    report.outputs["exponential_member"] = io::to_json(expo.distribution);
    report.outputs["deviation"] = deviation;
  }
  return kOk;
}

// project -------------------------------------------------------------------

struct ProjectArgs {
  std::string problem_file;
  std::optional<double> oracle;
  bool equivalence = false;
  std::string pythagorean_file;
};

int cmd_project(const ProjectArgs& a, Report& report) {
  const auto problem = io::problem_from_json(io::read_json_file(a.problem_file));
  report.inputs["problem"] = io::to_json(problem);
  const auto result = project(problem);
  report.outputs["result"] = io::to_json(result);
  if (!result.converged) {
    report.diagnostics.push_back("solver stopped at max_iterations before "
                                 "meeting the convergence certificate");
  }

  if (a.oracle) {
    report.inputs["oracle_resolution"] = *a.oracle;
    const auto grid = project_grid_oracle(problem, *a.oracle);
    double gap = 0.0;
    for (std::size_t i = 0; i < grid.minimizer.size(); ++i) {
      gap = std::max(gap, std::abs(grid.minimizer[i] - result.minimizer[i]));
    }
    report.outputs["oracle"] = io::to_json(grid);
    report.outputs["oracle_gap"] = gap;
    if (result.objective.is_finite() && grid.objective.is_finite()) {
      report.outputs["oracle_objective_gap"] =
          std::abs(result.objective.value() - grid.objective.value());
    }
  }
  if (a.equivalence) {
    report.outputs["equivalence_gap"] = project_equivalence_check(problem);
  }
  if (!a.pythagorean_file.empty()) {
    const auto p = load_distribution(a.pythagorean_file);
    require_same_labels(p, problem.target);
    report.inputs["p"] = io::to_json(p);
    report.outputs["pythagorean_gap"] =
        pythagorean_gap(p, result.minimizer, problem.target, problem.alpha,
                        problem.divergence);
  }
  return result.converged ? kOk : kMaxIterations;
}

// metric --------------------------------------------------------------------

struct MetricArgs {
  int dim = 1;
  std::vector<double> phi;
  std::string kind = "kl";
  std::optional<double> alpha;
  double h = kDefaultMetricStep;
  bool analytic = false;
  bool escort_check = false;
  bool csv = false;
};

int cmd_metric(const MetricArgs& a, Report& report, std::ostream& out,
               bool& report_suppressed) {
  const auto kind = parse_divergence_kind(a.kind);
  Alpha alpha = Alpha::relaxed(1.0);
  if (kind != DivergenceKind::KL || a.escort_check) {
    if (!a.alpha) {
      throw Error(ErrorCode::InvalidAlpha, "--alpha is required");
    }
    alpha = Alpha(*a.alpha);
  }
  const SimplexChart chart(a.dim);
  report.inputs = {{"dim", a.dim},  {"phi", a.phi}, {"kind", a.kind},
                   {"h", a.h}};
  if (a.alpha) report.inputs["alpha"] = *a.alpha;

  const auto point = chart_point(chart, a.phi, 10.0 * a.h);
  const auto metric = eguchi_metric_fd(kind, alpha, chart, a.phi, a.h);
  if (a.csv) {
    out << io::to_csv(metric.entries);
    report_suppressed = true;
    return kOk;
  }
  report.outputs["point"] = io::to_json(point);
  report.outputs["metric"] = io::to_json(metric);
  if (metric.asymmetry > 1e-8) {
    report.diagnostics.push_back("finite-difference metric asymmetry " +
                                 io::format_double(metric.asymmetry) +
                                 " exceeds 1e-8");
  }
  if (!metric.is_positive_definite()) {
    report.diagnostics.push_back("metric is not positive definite");
  }

  if (a.analytic) {
    MetricMatrix reference;
    switch (kind) {
      case DivergenceKind::KL:
        reference = fisher_information(chart, a.phi);
        break;
      case DivergenceKind::Renyi:
        reference = renyi_metric(chart, a.phi, alpha);
        break;
      case DivergenceKind::IAlpha:
        reference = fisher_information(SimplexChart::escorted(a.dim, alpha), a.phi);
        reference.entries /= alpha.value();
        break;
    }
    report.outputs["analytic"] = io::to_json(reference);
    report.outputs["deviation"] =
        (metric.entries - reference.entries).lpNorm<Eigen::Infinity>();
  }
  if (a.escort_check) {
    report.outputs["escort_chart_check"] =
        escort_chart_metric_check(chart, a.phi, alpha, a.h);
  }
  return kOk;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::optional<int> trials;
  std::uint64_t seed = 20260101;
};

int default_trials(std::string_view suite) {
  if (suite == "correspondence") return 1000;
  if (suite == "families") return 200;
  if (suite == "metric") return 30;
  return 20;
}

int cmd_verify(const VerifyArgs& a, Report& report) {
  std::uint64_t seed = a.seed;
  if (const char* env = std::getenv("ALPHAGEO_SEED"); env && *env) {
    char* end = nullptr;
    const auto parsed = std::strtoull(env, &end, 10);
    if (*end != '\0') {
      throw Error(ErrorCode::ParseError,
                  "ALPHAGEO_SEED must be an unsigned integer");
    }
    seed = parsed;
    report.diagnostics.push_back("seed taken from ALPHAGEO_SEED");
  }
  const int trials = a.trials.value_or(default_trials(a.suite));
  report.inputs = {{"suite", a.suite}, {"trials", trials}, {"seed", seed}};
  const auto outcome = run_suite(a.suite, trials, seed);
  report.outputs = {{"passed", outcome.passed()},
                    {"summary", outcome.summary},
                    {"counterexamples", outcome.counterexamples}};
  return outcome.passed() ? kOk : kPropertyFailure;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InfeasibleFamily:
      return kInfeasible;
    case ErrorCode::ObjectiveInfinite:
      return kInfinite;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Relative alpha-entropy, Renyi divergence and their geometry"};
  app.name("alphageo");
  app.require_subcommand(1);

  DivergenceArgs div;
  auto* div_cmd = app.add_subcommand("divergence", "Evaluate a divergence");
  div_cmd->add_option("--kind", div.kind, "i-alpha | renyi | kl | l-alpha")
      ->required()
      ->check(CLI::IsMember({"i-alpha", "renyi", "kl", "l-alpha"}));
  auto* div_alpha = div_cmd->add_option("--alpha", div.alpha, "Order");
  div_cmd->add_flag("--relaxed", div.relaxed, "Admit alpha = 1");
  div_cmd->add_flag("--gap", div.gap,
                    "Also report the escort correspondence gap (i-alpha)");
  div_cmd->add_option("p", div.p_file, "First distribution (JSON)")->required();
  div_cmd->add_option("q", div.q_file, "Second distribution (JSON)")->required();

  EscortArgs esc;
  auto* esc_cmd = app.add_subcommand("escort", "Escort distribution");
  esc_cmd->add_option("--alpha", esc.alpha, "Order")->required();
  esc_cmd->add_flag("--inverse", esc.inverse, "Apply the inverse escort");
  esc_cmd->add_option("p", esc.p_file, "Distribution (JSON)")->required();

  MixtureArgs mix;
  auto* mix_cmd = app.add_subcommand("mixture", "(alpha, lambda)-mixture");
  mix_cmd->add_option("--alpha", mix.alpha, "Order");
  mix_cmd->add_option("--lambda", mix.lambda, "Weight in (0,1)")->required();
  mix_cmd->add_flag("--relaxed", mix.relaxed, "Admit alpha = 1");
  mix_cmd->add_option("--norm0", mix.norm0, "Pseudo-norm of P0");
  mix_cmd->add_option("--norm1", mix.norm1, "Pseudo-norm of P1");
  mix_cmd->add_option("files", mix.files, "P0 and P1 (JSON)");

  FamilyArgs fam;
  auto* fam_cmd = app.add_subcommand("family", "Power-law and exponential families");
  fam_cmd->add_option("--spec", fam.spec_file, "FamilySpec (JSON)");
  fam_cmd->add_flag("--transform", fam.transform,
                    "Map a power-law member to the (1/alpha)-exponential family");
  fam_cmd->add_option("--residual", fam.residual_file,
                      "Distribution whose constraint residual is reported");
  fam_cmd->add_option("--constraints", fam.constraints_file,
                      "ConstraintFamily (JSON)");
  fam_cmd->add_option("--alpha", fam.alpha, "Order");
  fam_cmd->add_option("--alpha-exp", fam.alpha_exp, "Evaluate e_alpha(u)");

  ProjectArgs proj;
  auto* proj_cmd = app.add_subcommand("project", "Divergence projection");
  proj_cmd->add_option("problem", proj.problem_file, "ProjectionProblem (JSON)")
      ->required();
  proj_cmd->add_option("--oracle", proj.oracle, "Grid oracle resolution");
  proj_cmd->add_flag("--equivalence", proj.equivalence,
                     "Compare with the escorted Renyi projection");
  proj_cmd->add_option("--pythagorean", proj.pythagorean_file,
                       "Feasible distribution for the Pythagorean gap");

  MetricArgs met;
  auto* met_cmd = app.add_subcommand("metric", "Divergence-induced metric");
  met_cmd->add_option("--dim", met.dim, "Chart dimension n")->required();
  met_cmd->add_option("--phi", met.phi, "Chart coordinates")
      ->required()
      ->delimiter(',');
  met_cmd->add_option("--kind", met.kind, "i-alpha | renyi | kl")
      ->check(CLI::IsMember({"i-alpha", "renyi", "kl"}));
  met_cmd->add_option("--alpha", met.alpha, "Order");
  met_cmd->add_option("--step", met.h, "Finite-difference step h");
  met_cmd->add_flag("--analytic", met.analytic,
                    "Also report the closed-form metric");
  met_cmd->add_flag("--escort-check", met.escort_check,
                    "Compare with the Renyi metric on the escorted chart");
  met_cmd->add_flag("--csv", met.csv, "Print the matrix as CSV only");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Randomized property suites");
  ver_cmd->add_option("suite", ver.suite)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver_cmd->add_option("--trials", ver.trials, "Number of trials");
  ver_cmd->add_option("--seed", ver.seed, "Seed (ALPHAGEO_SEED overrides)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  bool suppressed = false;
  try {
    if (*div_cmd) {
      report.command = "divergence";
      div.alpha_given = div_alpha->count() > 0;
      code = cmd_divergence(div, report);
    } else if (*esc_cmd) {
      report.command = "escort";
      code = cmd_escort(esc, report);
    } else if (*mix_cmd) {
      report.command = "mixture";
      code = cmd_mixture(mix, report);
    } else if (*fam_cmd) {
      report.command = "family";
      code = cmd_family(fam, report);
    } else if (*proj_cmd) {
      report.command = "project";
      code = cmd_project(proj, report);
    } else if (*met_cmd) {
      report.command = "metric";
      code = cmd_metric(met, report, out, suppressed);
    } else if (*ver_cmd) {
      report.command = "verify";
      code = cmd_verify(ver, report);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (!suppressed) emit(out, report, elapsed.count());
  return code;
}

}  // namespace alphageo::cli

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

#include "suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "alphageo/alphageo.hpp"

namespace alphageo::cli {

using nlohmann::json;

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  template <typename T, std::size_t N>
  T pick(const std::array<T, N>& values) {
    return values[static_cast<std::size_t>(integer(0, static_cast<int>(N) - 1))];
  }

  /// Interior distribution: independent masses in [lo, 1], renormalized.
  FiniteDistribution interior(std::size_t size, double lo = 0.05) {
    std::vector<double> mass(size);
    for (double& m : mass) m = uniform(lo, 1.0);
    return FiniteDistribution::from_mass(std::move(mass));
  }

 private:
  std::mt19937_64 rng_;
};

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

json mass_json(const FiniteDistribution& p) {
  return json(std::vector<double>(p.mass().begin(), p.mass().end()));
}

/// Records a check. A failing check appends the inputs to the counterexample
/// list together with the observed value and the bound it violated.
class Checker {
 public:
  explicit Checker(SuiteOutcome& outcome) : outcome_(outcome) {}

  void require_le(const std::string& check, double observed, double bound,
                  const json& inputs) {
    ++outcome_.checks;
    auto& worst = worst_[check];
    if (!std::isnan(observed)) worst = std::max(worst, observed);
    if (!(observed <= bound)) {
      outcome_.counterexamples.push_back({{"check", check},
                                          {"inputs", inputs},
                                          {"observed", observed},
                                          {"bound", bound}});
    }
  }

  void require(const std::string& check, bool ok, const json& inputs) {
    ++outcome_.checks;
    if (!ok) {
      outcome_.counterexamples.push_back(
          {{"check", check}, {"inputs", inputs}});
    }
  }

  void fail(const std::string& check, const std::string& what,
            const json& inputs) {
    ++outcome_.checks;
    outcome_.counterexamples.push_back(
        {{"check", check}, {"inputs", inputs}, {"error", what}});
  }

  void finish() {
    json worst = json::object();
    for (const auto& [name, value] : worst_) worst[name] = value;
    outcome_.summary["worst"] = worst;
  }

 private:
  SuiteOutcome& outcome_;
  std::map<std::string, double> worst_;
};

// correspondence ----------------------------------------------------------

void correspondence_suite(int trials, Sampler& rng, SuiteOutcome& outcome) {
  Checker check(outcome);
  constexpr std::array<double, 4> kOrders{0.3, 0.5, 2.0, 4.0};
  for (int t = 0; t < trials; ++t) {
    const auto size = static_cast<std::size_t>(rng.integer(2, 6));
    const Alpha alpha(rng.pick(kOrders));
    const auto p = rng.interior(size);
    const auto q = rng.interior(size);
    const json pq = {{"p", mass_json(p)},
                     {"q", mass_json(q)},
                     {"alpha", alpha.value()}};
    check.require_le("correspondence_gap", correspondence_gap(p, q, alpha),
                     1e-10, pq);

    const double kl = kl_divergence(p, q).value();
    for (double a : {1.0 - 1e-4, 1.0 + 1e-4}) {
      check.require_le("kl_limit",
                       std::abs(renyi_divergence(p, q, Alpha(a)).value() - kl),
                       1e-3, pq);
    }

    const auto p1 = rng.interior(size);
    const MixtureWeight lambda(rng.uniform(0.05, 0.95));
    const double n0 = alpha_pseudo_norm(p, alpha);
    const double n1 = alpha_pseudo_norm(p1, alpha);
    const json mix = {{"p0", mass_json(p)},
                      {"p1", mass_json(p1)},
                      {"alpha", alpha.value()},
                      {"lambda", lambda.value()}};
    const auto escorts_mixed =
        alpha_lambda_mixture(escort(p, alpha), escort(p1, alpha),
                             alpha.reciprocal(), lambda);
    const auto forward = escort(
        convex_combination(p, p1, mixture_weight_transform(lambda, n0, n1)),
        alpha);
    check.require_le("mixture_weight_identity",
                     max_abs_diff(forward.mass(), escorts_mixed.mass()), 1e-10,
                     mix);

    const auto dual_mixed =
        alpha_lambda_mixture(escort(p, alpha), escort(p1, alpha),
                             alpha.reciprocal(),
                             mixture_weight_transform(lambda, n1, n0));
    const auto pulled_back = escort_inverse(dual_mixed, alpha);
    check.require_le(
        "mixture_weight_dual_identity",
        max_abs_diff(pulled_back.mass(), convex_combination(p, p1, lambda).mass()),
        1e-10, mix);

    const double z = mixture_normalizer(p, p1, alpha, lambda);
    check.require("mixture_normalizer_bound", z > 0.0 && z <= 2.0, mix);
  }
  check.finish();
}

// projection corpus --------------------------------------------------------

struct LinearProblem {
  ProjectionProblem a;  // relative alpha-entropy over the linear family
  ProjectionProblem b;  // Renyi of order 1/alpha over the (1/alpha)-linear one
};

/// Target and one constraint on three atoms. The constraint is shifted so
/// that an independent interior point satisfies it, then scaled so that its
/// component orthogonal to the constant vector has unit length.
LinearProblem random_linear_problem(Sampler& rng, Alpha alpha) {
  const auto q = rng.interior(3);
  const auto anchor = rng.interior(3);
  Eigen::RowVectorXd f(3);
  for (Eigen::Index i = 0; i < 3; ++i) f(i) = rng.uniform(-1.0, 1.0);
  double at_anchor = 0.0;
  for (Eigen::Index i = 0; i < 3; ++i) {
    at_anchor += f(i) * anchor[static_cast<std::size_t>(i)];
  }
  f.array() -= at_anchor;
  const double scale = (f.array() - f.mean()).matrix().norm();
  if (scale > 1e-3) f /= scale;

  ConstraintFamily family(q.labels(), f);
  ProjectionProblem a{q, family, DivergenceKind::IAlpha, alpha, 1e-10, 200};
  ProjectionProblem b{escort(q, alpha), family.with_order(alpha.reciprocal()),
                      DivergenceKind::Renyi, alpha.reciprocal(), 1e-10, 200};
  return {std::move(a), std::move(b)};
}

/// A feasible point P* + s d along a random direction d of the constraint
/// null space, with s drawn inside the simplex.
FiniteDistribution sample_feasible(Sampler& rng, const FiniteDistribution& base,
                                   const Eigen::MatrixXd& basis) {
  Eigen::VectorXd coeff(basis.cols());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    coeff(i) = rng.uniform(-1.0, 1.0);
  }
  const Eigen::VectorXd dir = (basis * coeff).normalized();
  double lo = -1e300;
  double hi = 1e300;
  for (Eigen::Index i = 0; i < dir.size(); ++i) {
    const double x = base[static_cast<std::size_t>(i)];
    if (dir(i) > 0) lo = std::max(lo, -x / dir(i));
    if (dir(i) < 0) hi = std::min(hi, -x / dir(i));
  }
  const double s = rng.uniform(0.95 * lo, 0.95 * hi);
  std::vector<double> mass(base.mass().begin(), base.mass().end());
  for (std::size_t i = 0; i < mass.size(); ++i) {
    mass[i] = std::max(0.0, mass[i] + s * dir(static_cast<Eigen::Index>(i)));
  }
  return base.with_mass(std::move(mass));
}

void pythagorean_suite(int trials, Sampler& rng, SuiteOutcome& outcome) {
  Checker check(outcome);
  constexpr std::array<double, 2> kOrders{0.5, 2.0};
  constexpr int kSamples = 50;
  for (int t = 0; t < trials; ++t) {
    const Alpha alpha(kOrders[static_cast<std::size_t>(t) % 2]);
    const auto problem = random_linear_problem(rng, alpha);
    const json inputs = io::to_json(problem.a);
    try {
      const auto ra = project(problem.a);
      const auto rb = project(problem.b);
      check.require("converged", ra.converged && rb.converged, inputs);
      check.require_le(
          "projection_equivalence",
          max_abs_diff(escort(ra.minimizer, alpha).mass(), rb.minimizer.mass()),
          1e-4, inputs);
      const auto slice = affine_slice(problem.a.family.rows());
      const auto& q = problem.a.target;
      for (int s = 0; s < kSamples; ++s) {
        const auto p = sample_feasible(rng, ra.minimizer, slice.basis);
        json sample = {{"problem", inputs}, {"p", mass_json(p)}};
        const double gap = pythagorean_gap(p, ra.minimizer, q, alpha,
                                           DivergenceKind::IAlpha);
        check.require_le("pythagorean_inequality", -gap, 1e-8, sample);
        const double image =
            pythagorean_gap(escort(p, alpha), escort(ra.minimizer, alpha),
                            escort(q, alpha), alpha.reciprocal(),
                            DivergenceKind::Renyi);
        check.require_le("escort_transport", std::abs(gap - image), 1e-10,
                         sample);
      }
    } catch (const Error& e) {
      check.fail("solve", e.what(), inputs);
    }
  }
  check.finish();
}

/// Largest directional derivative of the objective along the transfer
/// directions e_i - e_j at p; a local Lipschitz estimate in max-norm.
double lipschitz_estimate(const ProjectionProblem& problem,
                          const FiniteDistribution& p) {
  const double step = 1e-6;
  double best = 0.0;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || p[j] < 2 * step) continue;
      std::vector<double> plus(p.mass().begin(), p.mass().end());
      plus[i] += step;
      plus[j] -= step;
      const double up =
          divergence(problem.divergence, plus, problem.target.mass(),
                     problem.alpha)
              .as_double();
      const double here =
          divergence(problem.divergence, p.mass(), problem.target.mass(),
                     problem.alpha)
              .as_double();
      best = std::max(best, std::abs(up - here) / step);
    }
  }
  return best;
}

void projection_suite(int trials, Sampler& rng, SuiteOutcome& outcome) {
  Checker check(outcome);
  constexpr std::array<double, 2> kOrders{0.5, 2.0};
  constexpr double kResolution = 1e-3;
  for (int t = 0; t < trials; ++t) {
    const Alpha alpha(kOrders[static_cast<std::size_t>(t) % 2]);
    const auto problem = random_linear_problem(rng, alpha);
    for (const auto* side : {&problem.a, &problem.b}) {
      const json inputs = io::to_json(*side);
      try {
        const auto solved = project(*side);
        const auto grid = project_grid_oracle(*side, kResolution);
        check.require("converged", solved.converged, inputs);
        check.require_le("feasibility", solved.residual_norm, side->tolerance,
                         inputs);
        check.require_le("stationarity", solved.stationarity, side->tolerance,
                         inputs);
        check.require_le(
            "oracle_minimizer",
            max_abs_diff(solved.minimizer.mass(), grid.minimizer.mass()),
            2 * kResolution, inputs);
        const double bound =
            2 * kResolution * lipschitz_estimate(*side, solved.minimizer);
        check.require_le("oracle_objective",
                         std::abs(solved.objective.value() -
                                  grid.objective.value()),
                         bound, inputs);
      } catch (const Error& e) {
        check.fail("solve", e.what(), inputs);
      }
    }
  }
  check.finish();
}

// families -----------------------------------------------------------------

/// Shrinks theta by halves until every power-law bracket is at least a tenth
/// of its theta = 0 value.
Eigen::VectorXd admissible_theta(const FamilySpec& spec, Eigen::VectorXd theta) {
  FamilySpec probe = spec;
  for (int i = 0; i < 60; ++i) {
    probe.theta = theta;
    const Eigen::VectorXd bracket = family_bracket(probe);
    bool ok = true;
    for (Eigen::Index x = 0; x < bracket.size(); ++x) {
      const double base = std::pow(spec.generator[static_cast<std::size_t>(x)],
                                   spec.alpha.value() - 1.0);
      if (!(bracket(x) >= 0.1 * base)) ok = false;
    }
    if (ok) return theta;
    theta *= 0.5;
  }
  return Eigen::VectorXd::Zero(theta.size());
}

void families_suite(int trials, Sampler& rng, SuiteOutcome& outcome) {
  Checker check(outcome);
  constexpr std::array<double, 3> kOrders{0.5, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    const auto size = static_cast<std::size_t>(rng.integer(2, 5));
    const auto k = static_cast<Eigen::Index>(
        rng.integer(1, std::min<int>(2, static_cast<int>(size) - 1)));
    const Alpha alpha(rng.pick(kOrders));
    const auto q = rng.interior(size);
    Eigen::MatrixXd f(k, static_cast<Eigen::Index>(size));
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
      for (Eigen::Index c = 0; c < f.cols(); ++c) f(r, c) = rng.uniform(-1, 1);
    }
    Eigen::VectorXd theta(k);
    for (Eigen::Index i = 0; i < k; ++i) theta(i) = rng.uniform(-2.0, 2.0);
    FamilySpec spec{q, f, theta, alpha, FamilyKind::PowerLaw};
    spec.theta = admissible_theta(spec, theta);
    const json inputs = io::to_json(spec);

    try {
      const auto member = power_law_member(spec);
      FamilySpec image{escort(q, alpha), f,
                       theta_transform(spec.theta, q, alpha),
                       alpha.reciprocal(), FamilyKind::Exponential};
      const auto expo = exponential_member(image);
      check.require_le("family_transport_identity",
                       max_abs_diff(escort(member.distribution, alpha).mass(),
                                    expo.distribution.mass()),
                       1e-12, inputs);

      FamilySpec origin = spec;
      origin.theta.setZero();
      check.require_le(
          "theta_zero_fixed_point",
          max_abs_diff(power_law_member(origin).distribution.mass(), q.mass()),
          1e-12, inputs);

      for (double c : {0.25, 0.5, 0.75}) {
        FamilySpec scaled = spec;
        scaled.theta *= c;
        const Eigen::VectorXd bracket = family_bracket(scaled);
        check.require("domain_monotonicity", (bracket.array() > 0).all(),
                      inputs);
      }
    } catch (const Error& e) {
      check.fail("member", e.what(), inputs);
    }

    // Membership transport through the escort map, using the projection
    // slice to place a point exactly in the linear family.
    const ConstraintFamily family(q.labels(), f.topRows(1));
    const auto slice = affine_slice(family.rows());
    if ((slice.point.array() > 0).all()) {
      const auto p = q.with_mass(
          std::vector<double>(slice.point.data(),
                              slice.point.data() + slice.point.size()));
      const json member_inputs = {{"p", mass_json(p)},
                                  {"functions", io::matrix_to_json(f.topRows(1))},
                                  {"alpha", alpha.value()}};
      const double forward =
          alpha_linear_residual(escort(p, alpha), family, alpha.reciprocal())
              .lpNorm<Eigen::Infinity>();
      check.require_le("membership_transport", forward, 1e-12, member_inputs);
    }
  }
  check.finish();
}

// metric -------------------------------------------------------------------

std::vector<double> random_phi(Sampler& rng, int n) {
  // Masses in [1, 2] before renormalization keep every coordinate, and the
  // remainder, above 1/(2(n+1)) >= 0.125: clear of the widest stencil margin.
  const auto p = [&] {
    std::vector<double> mass(static_cast<std::size_t>(n) + 1);
    for (double& m : mass) m = rng.uniform(1.0, 2.0);
    return FiniteDistribution::from_mass(std::move(mass));
  }();
  return {p.mass().begin(), p.mass().begin() + n};
}

double relative_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return ((a - b).array().abs() / (1.0 + b.array().abs())).maxCoeff();
}

void metric_suite(int trials, Sampler& rng, SuiteOutcome& outcome) {
  Checker check(outcome);
  constexpr std::array<double, 4> kOrders{0.3, 0.5, 2.0, 4.0};
  const Alpha one = Alpha::relaxed(1.0);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % 3;
    const Alpha alpha(rng.pick(kOrders));
    const auto phi = random_phi(rng, n);
    const SimplexChart chart(n);
    const json inputs = {{"n", n}, {"phi", phi}, {"alpha", alpha.value()}};
    try {
      check.require_le("escort_chart_metric",
                       escort_chart_metric_check(chart, phi, alpha), 1e-6,
                       inputs);

      const auto kl = eguchi_metric_fd(DivergenceKind::KL, one, chart, phi);
      const auto renyi =
          eguchi_metric_fd(DivergenceKind::Renyi, alpha, chart, phi);
      check.require_le("renyi_scaling",
                       relative_deviation(renyi.entries,
                                          alpha.value() * kl.entries),
                       1e-4, inputs);

      const auto ia = eguchi_metric_fd(DivergenceKind::IAlpha, alpha, chart,
                                       phi);
      const auto escorted_kl = eguchi_metric_fd(
          DivergenceKind::KL, one, SimplexChart::escorted(n, alpha), phi);
      check.require_le("i_alpha_scaling",
                       relative_deviation(ia.entries,
                                          escorted_kl.entries / alpha.value()),
                       1e-4, inputs);

      const auto fisher = fisher_information(chart, phi);
      double previous = std::numeric_limits<double>::infinity();
      bool monotone = true;
      for (double h : {1e-2, 1e-3, 1e-4}) {
        const auto g = eguchi_metric_fd(DivergenceKind::KL, one, chart, phi, h);
        const double err =
            (g.entries - fisher.entries).lpNorm<Eigen::Infinity>();
        if (!(err < previous)) monotone = false;
        previous = err;
      }
      check.require("fd_error_monotone", monotone, inputs);

      for (const auto* g : {&kl, &renyi, &ia}) {
        check.require("symmetric", g->is_symmetric(1e-8), inputs);
        check.require("positive_definite", g->is_positive_definite(), inputs);
      }
    } catch (const Error& e) {
      check.fail("metric", e.what(), inputs);
    }
  }
  check.finish();
}

using SuiteFn = std::function<void(int, Sampler&, SuiteOutcome&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"correspondence", correspondence_suite},
      {"families", families_suite},
      {"metric", metric_suite},
      {"projection", projection_suite},
      {"pythagorean", pythagorean_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteOutcome run_suite(std::string_view suite, int trials, std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown suite '" + std::string(suite) + "'");
  }
  if (trials < 1) {
    throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  }
  SuiteOutcome outcome;
  Sampler rng(seed);
  it->second(trials, rng, outcome);
  outcome.summary["checks"] = outcome.checks;
  outcome.summary["failures"] = outcome.counterexamples.size();
  return outcome;
}

}  // namespace alphageo::cli

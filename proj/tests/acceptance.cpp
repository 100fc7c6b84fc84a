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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance, corpus size and time budget is fixed
// below; the corpora are drawn from fixed seeds.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "alphageo/alphageo.hpp"

namespace {

using namespace alphageo;

constexpr double kCorrespondenceTol = 1e-10;
constexpr double kAnchorTol = 1e-12;
constexpr double kMixtureTol = 1e-10;
constexpr double kEquivalenceTol = 1e-4;
constexpr double kOracleResolution = 1e-3;
constexpr double kOracleTol = 2e-3;
constexpr double kPythagoreanFloor = -1e-8;
constexpr double kTransportTol = 1e-10;
constexpr double kFamilyTransportTol = 1e-12;
constexpr double kMetricRelTol = 1e-4;
constexpr double kEscortChartTol = 1e-6;

constexpr double kBudget1 = 1.0;
constexpr double kBudget3 = 1.0;
constexpr double kBudget4 = 30.0;
constexpr double kBudget5 = 5.0;
constexpr double kBudget6 = 1.0;
constexpr double kBudget7 = 10.0;
constexpr double kBudget8 = 10.0;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  FiniteDistribution interior(std::size_t size, double lo = 0.05) {
    std::vector<double> mass(size);
    for (double& m : mass) m = uniform(lo, 1.0);
    return FiniteDistribution::from_mass(std::move(mass));
  }
  std::vector<double> phi(int n) {
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    double total = 0;
    for (double& x : w) total += (x = uniform(1.0, 2.0));
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(w[static_cast<std::size_t>(i)] / total);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

/// Runs `body` and turns an escaping library error into a failed criterion.
void criterion(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("unexpected error: ") + e.what());
  }
}

void correspondence() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  constexpr std::array<double, 4> kOrders{0.3, 0.5, 2.0, 4.0};
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto size = static_cast<std::size_t>(rng.integer(2, 6));
    const auto p = rng.interior(size);
    const auto q = rng.interior(size);
    for (double a : kOrders) worst = std::max(worst, correspondence_gap(p, q, Alpha(a)));
  }
  const double elapsed = seconds_since(start);
  report(1, worst <= kCorrespondenceTol && elapsed < kBudget1,
         "1000 pairs x 4 orders, max gap " + fmt(worst) + " (tol " +
             fmt(kCorrespondenceTol) + "), " + fmt(elapsed) + " s");
}

void anchors() {
  const double target = std::log(10.0 / 9.0);
  const double i2 =
      relative_alpha_entropy(FiniteDistribution::from_mass({2.0 / 3, 1.0 / 3}),
                             FiniteDistribution::from_mass({0.5, 0.5}), Alpha(2))
          .value();
  const double d_half =
      renyi_divergence(FiniteDistribution::from_mass({0.8, 0.2}),
                       FiniteDistribution::from_mass({0.5, 0.5}), Alpha(0.5))
          .value();
  const double err = std::max(std::abs(i2 - target), std::abs(d_half - target));
  report(2, err <= kAnchorTol, "ln(10/9) anchors, max error " + fmt(err));
}

void mixtures() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(103);
  constexpr std::array<double, 4> kOrders{0.3, 0.5, 2.0, 4.0};
  double worst_forward = 0;
  double worst_dual = 0;
  for (int t = 0; t < 500; ++t) {
    const auto size = static_cast<std::size_t>(rng.integer(2, 6));
    const Alpha alpha(kOrders[static_cast<std::size_t>(t) % kOrders.size()]);
    const auto p0 = rng.interior(size);
    const auto p1 = rng.interior(size);
    const MixtureWeight lambda(rng.uniform(0.05, 0.95));
    const double n0 = alpha_pseudo_norm(p0, alpha);
    const double n1 = alpha_pseudo_norm(p1, alpha);
    const auto e0 = escort(p0, alpha);
    const auto e1 = escort(p1, alpha);

    const auto forward = escort(
        convex_combination(p0, p1, mixture_weight_transform(lambda, n0, n1)), alpha);
    const auto mixed = alpha_lambda_mixture(e0, e1, alpha.reciprocal(), lambda);
    worst_forward = std::max(worst_forward, max_abs_diff(forward.mass(), mixed.mass()));

    const auto dual = escort_inverse(
        alpha_lambda_mixture(e0, e1, alpha.reciprocal(),
                             mixture_weight_transform(lambda, n1, n0)),
        alpha);
    worst_dual = std::max(
        worst_dual,
        max_abs_diff(dual.mass(), convex_combination(p0, p1, lambda).mass()));
  }
  const double elapsed = seconds_since(start);
  report(3,
         worst_forward <= kMixtureTol && worst_dual <= kMixtureTol &&
             elapsed < kBudget3,
         "500 triples, lambda' identity " + fmt(worst_forward) +
             ", lambda'' identity " + fmt(worst_dual) + " (tol " +
             fmt(kMixtureTol) + "), " + fmt(elapsed) + " s");
}

struct SolvedProblem {
  ProjectionProblem a;
  ProjectionResult ra;
};

/// Linear constraint f on three atoms, shifted so that a random interior
/// anchor satisfies it and scaled to unit spread.
ProjectionProblem random_problem(Rng& rng, Alpha alpha) {
  const auto q = rng.interior(3);
  const auto anchor = rng.interior(3);
  Eigen::RowVectorXd f(3);
  for (Eigen::Index i = 0; i < 3; ++i) f(i) = rng.uniform(-1.0, 1.0);
  double at_anchor = 0;
  for (Eigen::Index i = 0; i < 3; ++i) at_anchor += f(i) * anchor[static_cast<std::size_t>(i)];
  f.array() -= at_anchor;
  const double spread = (f.array() - f.mean()).matrix().norm();
  if (spread > 1e-3) f /= spread;
  return {q, ConstraintFamily(q.labels(), f), DivergenceKind::IAlpha, alpha, 1e-10,
          200};
}

std::vector<SolvedProblem> projection_corpus;

void projection_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(107);
  double worst_equivalence = 0;
  double worst_oracle = 0;
  int oracle_misses = 0;
  bool all_converged = true;
  for (int t = 0; t < 20; ++t) {
    const Alpha alpha(t % 2 == 0 ? 0.5 : 2.0);
    auto a = random_problem(rng, alpha);
    ProjectionProblem b{escort(a.target, alpha), a.family.with_order(alpha.reciprocal()),
                        DivergenceKind::Renyi, alpha.reciprocal(), 1e-10, 200};
    const auto ra = project(a);
    const auto rb = project(b);
    all_converged = all_converged && ra.converged && rb.converged;
    worst_equivalence = std::max(
        worst_equivalence, max_abs_diff(escort(ra.minimizer, alpha).mass(), rb.minimizer.mass()));
    const auto ga = project_grid_oracle(a, kOracleResolution);
    const auto gb = project_grid_oracle(b, kOracleResolution);
    for (double gap : {max_abs_diff(ra.minimizer.mass(), ga.minimizer.mass()),
                       max_abs_diff(rb.minimizer.mass(), gb.minimizer.mass())}) {
      worst_oracle = std::max(worst_oracle, gap);
      if (gap > kOracleTol) ++oracle_misses;
    }
    projection_corpus.push_back({std::move(a), ra});
  }
  const double elapsed = seconds_since(start);
  report(4,
         all_converged && worst_equivalence <= kEquivalenceTol &&
             worst_oracle <= kOracleTol && elapsed < kBudget4,
         std::string("20 problems, converged ") + (all_converged ? "yes" : "no") +
             ", equivalence " + fmt(worst_equivalence) + " (tol " +
             fmt(kEquivalenceTol) + "), grid oracle at resolution " +
             fmt(kOracleResolution) + " max deviation " + fmt(worst_oracle) +
             " (tol " + fmt(kOracleTol) + ", " + std::to_string(oracle_misses) +
             "/40 comparisons over), " + fmt(elapsed) + " s");
}

FiniteDistribution sample_feasible(Rng& rng, const FiniteDistribution& base,
                                   const Eigen::MatrixXd& basis) {
  Eigen::VectorXd coeff(basis.cols());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = rng.uniform(-1.0, 1.0);
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

void pythagorean() {
  const auto start = std::chrono::steady_clock::now();
  if (projection_corpus.size() != 20) {
    report(5, false, "criterion 4 corpus unavailable");
    return;
  }
  Rng rng(109);
  double lowest = INFINITY;
  double worst_transport = 0;
  for (const auto& solved : projection_corpus) {
    const auto& q = solved.a.target;
    const auto& star = solved.ra.minimizer;
    const Alpha alpha = solved.a.alpha;
    const auto basis = affine_slice(solved.a.family.rows()).basis;
    for (int s = 0; s < 50; ++s) {
      const auto p = sample_feasible(rng, star, basis);
      const double gap = pythagorean_gap(p, star, q, alpha, DivergenceKind::IAlpha);
      const double image =
          pythagorean_gap(escort(p, alpha), escort(star, alpha), escort(q, alpha),
                          alpha.reciprocal(), DivergenceKind::Renyi);
      lowest = std::min(lowest, gap);
      worst_transport = std::max(worst_transport, std::abs(gap - image));
    }
  }
  const double elapsed = seconds_since(start);
  report(5,
         lowest >= kPythagoreanFloor && worst_transport <= kTransportTol &&
             elapsed < kBudget5,
         "1000 feasible samples, min gap " + fmt(lowest) + " (floor " +
             fmt(kPythagoreanFloor) + "), escort transport " + fmt(worst_transport) +
             " (tol " + fmt(kTransportTol) + "), " + fmt(elapsed) + " s");
}

void family_transport() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(113);
  constexpr std::array<double, 3> kOrders{0.5, 2.0, 3.0};
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    const int size = rng.integer(2, 5);
    const int k = rng.integer(1, std::min(2, size - 1));
    const Alpha alpha(kOrders[static_cast<std::size_t>(t) % kOrders.size()]);
    const auto q = rng.interior(static_cast<std::size_t>(size));
    Eigen::MatrixXd f(k, size);
    for (Eigen::Index r = 0; r < f.rows(); ++r) {
      for (Eigen::Index c = 0; c < f.cols(); ++c) f(r, c) = rng.uniform(-1, 1);
    }
    Eigen::VectorXd theta(k);
    for (Eigen::Index i = 0; i < k; ++i) theta(i) = rng.uniform(-2.0, 2.0);
    FamilySpec spec{q, f, theta, alpha, FamilyKind::PowerLaw};
    // Halve theta until every bracket keeps a tenth of its theta = 0 value.
    for (int i = 0; i < 60; ++i) {
      const Eigen::VectorXd bracket = family_bracket(spec);
      bool ok = true;
      for (Eigen::Index x = 0; x < bracket.size(); ++x) {
        ok = ok && bracket(x) >= 0.1 * std::pow(q[static_cast<std::size_t>(x)],
                                                alpha.value() - 1.0);
      }
      if (ok) break;
      spec.theta *= 0.5;
    }
    const auto member = power_law_member(spec);
    const FamilySpec image{escort(q, alpha), f, theta_transform(spec.theta, q, alpha),
                           alpha.reciprocal(), FamilyKind::Exponential};
    worst = std::max(worst, max_abs_diff(escort(member.distribution, alpha).mass(),
                                         exponential_member(image).distribution.mass()));
  }
  const double elapsed = seconds_since(start);
  report(6, worst <= kFamilyTransportTol && elapsed < kBudget6,
         "200 specs, max deviation " + fmt(worst) + " (tol " + fmt(kFamilyTransportTol) +
             "), " + fmt(elapsed) + " s");
}

struct MetricPoint {
  int n;
  std::vector<double> phi;
};

std::vector<MetricPoint> metric_points() {
  Rng rng(127);
  std::vector<MetricPoint> points;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 10; ++i) points.push_back({n, rng.phi(n)});
  }
  return points;
}

/// Largest |a - b| / (1 + |b|) over the entries.
double relative_excess(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return ((a - b).array().abs() / (1.0 + b.array().abs())).maxCoeff();
}

void metric_scaling() {
  const auto start = std::chrono::steady_clock::now();
  double worst_scaling = 0;
  bool monotone = true;
  for (const auto& pt : metric_points()) {
    const SimplexChart chart(pt.n);
    const auto kl =
        eguchi_metric_fd(DivergenceKind::KL, Alpha::relaxed(1.0), chart, pt.phi).entries;
    for (double a : {0.5, 2.0}) {
      const auto renyi =
          eguchi_metric_fd(DivergenceKind::Renyi, Alpha(a), chart, pt.phi).entries;
      worst_scaling = std::max(worst_scaling, relative_excess(renyi, a * kl));
    }
    const auto exact = fisher_information(chart, pt.phi).entries;
    double previous = INFINITY;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const double err = (eguchi_metric_fd(DivergenceKind::KL, Alpha::relaxed(1.0),
                                           chart, pt.phi, h)
                              .entries -
                          exact)
                             .lpNorm<Eigen::Infinity>();
      monotone = monotone && err < previous;
      previous = err;
    }
  }
  const double elapsed = seconds_since(start);
  report(7, worst_scaling <= kMetricRelTol && monotone && elapsed < kBudget7,
         "30 points, scaling excess " + fmt(worst_scaling) + " (tol " +
             fmt(kMetricRelTol) + " relative), FD error monotone in h " +
             (monotone ? "yes" : "no") + ", " + fmt(elapsed) + " s");
}

void escort_chart_metric() {
  const auto start = std::chrono::steady_clock::now();
  double worst_check = 0;
  double worst_fisher = 0;
  for (const auto& pt : metric_points()) {
    const SimplexChart chart(pt.n);
    for (double a : {0.5, 2.0}) {
      const Alpha alpha(a);
      worst_check = std::max(worst_check, escort_chart_metric_check(chart, pt.phi, alpha));
      const auto direct =
          eguchi_metric_fd(DivergenceKind::IAlpha, alpha, chart, pt.phi).entries;
      const Eigen::MatrixXd escorted_kl =
          eguchi_metric_fd(DivergenceKind::KL, Alpha::relaxed(1.0),
                           SimplexChart::escorted(pt.n, alpha), pt.phi)
              .entries /
          a;
      worst_fisher = std::max(worst_fisher, relative_excess(direct, escorted_kl));
    }
  }
  const double elapsed = seconds_since(start);
  report(8,
         worst_check <= kEscortChartTol && worst_fisher <= kMetricRelTol &&
             elapsed < kBudget8,
         "30 points, escort chart check " + fmt(worst_check) + " (tol " +
             fmt(kEscortChartTol) + "), scaled escorted KL metric excess " +
             fmt(worst_fisher) + " (tol " + fmt(kMetricRelTol) + " relative), " +
             fmt(elapsed) + " s");
}

template <typename F>
bool raises(F&& f, ErrorCode expected) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == expected;
  }
  return false;
}

void degenerate() {
  const auto infinite = renyi_divergence(FiniteDistribution::from_mass({0.5, 0.5}),
                                         FiniteDistribution::from_mass({1, 0}),
                                         Alpha(2));
  const bool renyi_ok = infinite.is_infinite() && !std::isnan(infinite.as_double()) &&
                        raises([&] { (void)infinite.value(); },
                               ErrorCode::SupportViolation);

  Eigen::MatrixXd f(1, 2);
  f << 1, -1;
  Eigen::VectorXd theta(1);
  theta << 0.6;
  const FamilySpec spec{FiniteDistribution::uniform(2), f, theta, Alpha(2),
                        FamilyKind::PowerLaw};
  const bool domain_ok =
      raises([&] { (void)power_law_member(spec); }, ErrorCode::DomainViolation);

  const std::array outside{1.1};
  const std::array near_edge{0.99999};
  const bool chart_ok =
      raises([&] { (void)chart_point(SimplexChart(1), outside); },
             ErrorCode::BoundaryViolation) &&
      raises([&] {
        (void)eguchi_metric_fd(DivergenceKind::KL, Alpha::relaxed(1.0), SimplexChart(1),
                               near_edge, 1e-4);
      }, ErrorCode::BoundaryViolation);

  report(9, renyi_ok && domain_ok && chart_ok,
         std::string("infinite Renyi ") + (renyi_ok ? "ok" : "wrong") +
             ", power-law DomainViolation " + (domain_ok ? "ok" : "wrong") +
             ", chart BoundaryViolation " + (chart_ok ? "ok" : "wrong"));
}

}  // namespace

int main() {
  criterion(1, correspondence);
  criterion(2, anchors);
  criterion(3, mixtures);
  criterion(4, projection_equivalence);
  criterion(5, pythagorean);
  criterion(6, family_transport);
  criterion(7, metric_scaling);
  criterion(8, escort_chart_metric);
  criterion(9, degenerate);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

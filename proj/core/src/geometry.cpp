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

#include "alphageo/geometry.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace alphageo {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

SimplexChart::SimplexChart(int dimension) : dimension_(dimension) {
  if (dimension < 1) {
    throw Error(ErrorCode::InvalidArgument, "chart dimension must be >= 1");
  }
}

SimplexChart SimplexChart::escorted(int dimension, Alpha alpha) {
  SimplexChart chart(dimension);
  chart.escort_order_ = alpha;
  return chart;
}

FiniteDistribution SimplexChart::point(std::span<const double> phi,
                                       double margin) const {
  if (phi.size() != static_cast<std::size_t>(dimension_)) {
    throw Error(ErrorCode::LengthMismatch,
                "chart of dimension " + std::to_string(dimension_) +
                    " got " + std::to_string(phi.size()) + " coordinates");
  }
  std::vector<double> mass(phi.begin(), phi.end());
  double rest = 1.0;
  for (double v : phi) rest -= v;
  mass.push_back(rest);
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (!(mass[i] > margin)) {
      throw Error(ErrorCode::BoundaryViolation,
                  "chart coordinate " + std::to_string(i) + " gives mass " +
                      std::to_string(mass[i]) + ", needs > " +
                      std::to_string(margin));
    }
  }
  auto p = FiniteDistribution::from_mass(std::move(mass));
  if (escort_order_) return escort(p, *escort_order_);
  return p;
}

FiniteDistribution chart_point(const SimplexChart& chart,
                               std::span<const double> phi, double margin) {
  return chart.point(phi, margin);
}

bool MetricMatrix::is_symmetric(double tolerance) const {
  return (entries - entries.transpose()).lpNorm<Eigen::Infinity>() <=
         tolerance;
}

bool MetricMatrix::is_positive_definite() const {
  Eigen::LDLT<MatrixXd> ldlt(entries);
  if (ldlt.info() != Eigen::Success) return false;
  return (ldlt.vectorD().array() > 0.0).all();
}

namespace {

VectorXd to_vector(std::span<const double> phi) {
  VectorXd v(static_cast<Index>(phi.size()));
  for (std::size_t i = 0; i < phi.size(); ++i) v(static_cast<Index>(i)) = phi[i];
  return v;
}

std::vector<double> shifted(std::span<const double> phi, std::size_t axis,
                            double delta) {
  std::vector<double> out(phi.begin(), phi.end());
  out[axis] += delta;
  return out;
}

MetricMatrix symmetrized(MatrixXd raw, std::span<const double> phi) {
  MetricMatrix g;
  g.asymmetry = (raw - raw.transpose()).lpNorm<Eigen::Infinity>();
  g.entries = 0.5 * (raw + raw.transpose());
  g.phi = to_vector(phi);
  return g;
}

}  // namespace

MetricMatrix eguchi_metric_fd(DivergenceKind kind, Alpha alpha,
                              const SimplexChart& chart,
                              std::span<const double> phi, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) {
    throw Error(ErrorCode::InvalidArgument,
                "finite-difference step must lie in [1e-6, 1e-2]");
  }
  const std::size_t n = static_cast<std::size_t>(chart.dimension());
  chart.point(phi, 10.0 * h);

  // plus[i] = p at phi + h e_i, minus[i] = p at phi - h e_i.
  std::vector<FiniteDistribution> plus;
  std::vector<FiniteDistribution> minus;
  plus.reserve(n);
  minus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    plus.push_back(chart.point(shifted(phi, i, h)));
    minus.push_back(chart.point(shifted(phi, i, -h)));
  }
  auto d = [&](const FiniteDistribution& p, const FiniteDistribution& q) {
    return divergence(kind, p, q, alpha).value();
  };

  // Each entry is computed from its own four evaluations, independent of the
  // order in which entries are visited.
  MatrixXd raw(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double mixed = d(plus[i], plus[j]) - d(plus[i], minus[j]) -
                           d(minus[i], plus[j]) + d(minus[i], minus[j]);
      raw(static_cast<Index>(i), static_cast<Index>(j)) =
          -mixed / (4.0 * h * h);
    }
  }
  return symmetrized(std::move(raw), phi);
}

MetricMatrix fisher_information(const SimplexChart& chart,
                                std::span<const double> phi) {
  const auto n = static_cast<Index>(chart.dimension());
  const auto base = SimplexChart(chart.dimension()).point(phi);

  // score(x, i) = d/dphi_i log p_phi(x) on the plain chart.
  MatrixXd score = MatrixXd::Zero(n + 1, n);
  for (Index i = 0; i < n; ++i) {
    score(i, i) = 1.0 / base[static_cast<std::size_t>(i)];
    score(n, i) = -1.0 / base[static_cast<std::size_t>(n)];
  }
  VectorXd weight(n + 1);
  if (chart.escort_order()) {
    const double a = chart.escort_order()->value();
    const auto e = escort(base, *chart.escort_order());
    for (Index x = 0; x <= n; ++x) weight(x) = e[static_cast<std::size_t>(x)];
    const VectorXd mean = score.transpose() * weight;
    score = a * (score.rowwise() - mean.transpose());
  } else {
    for (Index x = 0; x <= n; ++x) weight(x) = base[static_cast<std::size_t>(x)];
  }
  MatrixXd g = score.transpose() * weight.asDiagonal() * score;
  return symmetrized(std::move(g), phi);
}

MetricMatrix renyi_metric(const SimplexChart& chart,
                          std::span<const double> phi, Alpha alpha) {
  auto g = fisher_information(chart, phi);
  g.entries *= alpha.value();
  return g;
}

double escort_chart_metric_check(const SimplexChart& chart,
                                 std::span<const double> phi, Alpha alpha,
                                 double h) {
  if (chart.escort_order()) {
    throw Error(ErrorCode::InvalidArgument,
                "escort_chart_metric_check takes the plain chart");
  }
  const auto direct =
      eguchi_metric_fd(DivergenceKind::IAlpha, alpha, chart, phi, h);
  const auto image = eguchi_metric_fd(
      DivergenceKind::Renyi, alpha.reciprocal(),
      SimplexChart::escorted(chart.dimension(), alpha), phi, h);
  return (direct.entries - image.entries).lpNorm<Eigen::Infinity>();
}

}  // namespace alphageo

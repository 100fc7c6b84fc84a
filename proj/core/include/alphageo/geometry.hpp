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

#pragma once

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "alphageo/divergence.hpp"
#include "alphageo/simplex.hpp"

namespace alphageo {

/// Default central-difference step for divergence-induced metrics.
inline constexpr double kDefaultMetricStep = 1e-4;

/// Coordinates phi = (phi_1..phi_n) on the open simplex over n+1 atoms:
/// p_phi(x_i) = phi_i for i <= n and p_phi(x_{n+1}) = 1 - sum phi.
///
/// An escorted chart maps the same phi to escort(p_phi, alpha); it is the
/// image manifold of the correspondence, kept in the original coordinates.
class SimplexChart {
 public:
  explicit SimplexChart(int dimension);
  static SimplexChart escorted(int dimension, Alpha alpha);

  int dimension() const noexcept { return dimension_; }
  const std::optional<Alpha>& escort_order() const noexcept {
    return escort_order_;
  }

  /// Throws BoundaryViolation unless every phi_i and 1 - sum phi exceed
  /// `margin` (strictly positive when margin == 0).
  FiniteDistribution point(std::span<const double> phi,
                           double margin = 0.0) const;

 private:
  int dimension_;
  std::optional<Alpha> escort_order_;
};

FiniteDistribution chart_point(const SimplexChart& chart,
                               std::span<const double> phi,
                               double margin = 0.0);

struct MetricMatrix {
  Eigen::MatrixXd entries;
  Eigen::VectorXd phi;
  /// Max-norm asymmetry of the raw matrix before symmetrization.
  double asymmetry = 0.0;

  bool is_symmetric(double tolerance = 1e-8) const;
  /// Pivoted LDL^T factorization with a strictly positive diagonal.
  bool is_positive_definite() const;
};

/// Eguchi metric g_ij = -d/dphi_i d/dphi'_j D(p_phi, p_phi') at phi' = phi,
/// approximated by the central four-point mixed stencil with step h and
/// symmetrized.
///
/// Requires h in [1e-6, 1e-2] (InvalidArgument) and every coordinate of phi
/// at least 10h away from the simplex boundary (BoundaryViolation).
MetricMatrix eguchi_metric_fd(DivergenceKind kind, Alpha alpha,
                              const SimplexChart& chart,
                              std::span<const double> phi,
                              double h = kDefaultMetricStep);

/// Analytic Fisher information sum_x p d_i log p d_j log p. For the plain
/// chart this is delta_ij / phi_i + 1 / (1 - sum phi); escorted charts use
/// the escort score alpha (d log p - E[d log p]).
MetricMatrix fisher_information(const SimplexChart& chart,
                                std::span<const double> phi);

/// alpha * fisher_information(chart, phi).
MetricMatrix renyi_metric(const SimplexChart& chart,
                          std::span<const double> phi, Alpha alpha);

/// Max-norm distance between the relative alpha-entropy metric on the plain
/// chart and the Renyi metric of order 1/alpha on the escorted chart, both
/// by finite differences at the same phi.
double escort_chart_metric_check(const SimplexChart& chart,
                                 std::span<const double> phi, Alpha alpha,
                                 double h = kDefaultMetricStep);

}  // namespace alphageo

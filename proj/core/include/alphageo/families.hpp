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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "alphageo/simplex.hpp"

namespace alphageo {

/// e_alpha(u) = max{1 + (1-alpha) u, 0}^(1/(1-alpha)); exp(u) when alpha is
/// the relaxed 1. Accepts u = +infinity.
double alpha_exp(double u, Alpha alpha);

/// Constraint functions f_1..f_k on an alphabet, cutting out either the
/// linear family {P : sum_x f_i(x) P(x) = 0} or, when an order is set, the
/// alpha-linear family {P : sum_x f_i(x) P(x)^alpha = 0}.
class ConstraintFamily {
 public:
  /// rows is k x |labels|. Throws LengthMismatch on a column count mismatch
  /// and RankDeficient when the rows are linearly dependent (relative rank
  /// tolerance 1e-10). Dependent rows must be collapsed by the caller.
  ConstraintFamily(std::vector<std::string> labels, Eigen::MatrixXd rows,
                   std::optional<Alpha> order = std::nullopt);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Eigen::MatrixXd& rows() const noexcept { return rows_; }
  const std::optional<Alpha>& order() const noexcept { return order_; }
  bool is_linear() const noexcept { return !order_.has_value(); }
  Eigen::Index num_constraints() const noexcept { return rows_.rows(); }
  Eigen::Index alphabet_size() const noexcept { return rows_.cols(); }

  /// Same functions, different order (nullopt for linear).
  ConstraintFamily with_order(std::optional<Alpha> order) const;

 private:
  std::vector<std::string> labels_;
  Eigen::MatrixXd rows_;
  std::optional<Alpha> order_;
};

enum class FamilyKind { PowerLaw, Exponential };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// Generator Q, functions f_i (k x |X|), parameter theta and order alpha of
/// an alpha-power-law or alpha-exponential family member.
struct FamilySpec {
  FiniteDistribution generator;
  Eigen::MatrixXd functions;
  Eigen::VectorXd theta;
  Alpha alpha;
  FamilyKind kind;
};

/// A family member together with its normalizer (M(theta) for the
/// power-law family, N(theta) for the exponential family).
struct FamilyMember {
  FiniteDistribution distribution;
  double normalizer;
};

/// The per-atom bracket of the member formula:
///   power-law:   Q(x)^(alpha-1) + (1-alpha) sum_i theta_i f_i(x)
///   exponential: Q(x)^(1-alpha) + (1-alpha) sum_i theta_i f_i(x)
Eigen::VectorXd family_bracket(const FamilySpec& spec);

/// P(x) proportional to bracket(x)^(-1/(1-alpha)).
///
/// Throws SupportViolation when alpha > 1 and Q lacks full support, and
/// DomainViolation (naming the atom) when any bracket is <= 0.
FamilyMember power_law_member(const FamilySpec& spec);

/// P(x) proportional to bracket(x)^(1/(1-alpha)). Throws DomainViolation
/// when any bracket is <= 0.
FamilyMember exponential_member(const FamilySpec& spec);

/// Dispatch on spec.kind.
FamilyMember family_member(const FamilySpec& spec);

/// theta'_i = -alpha theta_i / ||Q||^(alpha-1), the parameter under which the
/// escort of a power-law member is a (1/alpha)-exponential member generated
/// by escort(Q, alpha).
Eigen::VectorXd theta_transform(const Eigen::VectorXd& theta,
                                const FiniteDistribution& q, Alpha alpha);

/// sum_x f_i(x) P(x) for every row i.
Eigen::VectorXd linear_residual(const FiniteDistribution& p,
                                const ConstraintFamily& family);

/// sum_x f_i(x) P(x)^alpha for every row i.
Eigen::VectorXd alpha_linear_residual(const FiniteDistribution& p,
                                      const ConstraintFamily& family,
                                      Alpha alpha);

/// Residual of the family's own order: linear when the family is linear,
/// alpha-linear with the family order otherwise.
Eigen::VectorXd family_residual(const FiniteDistribution& p,
                                const ConstraintFamily& family);

}  // namespace alphageo

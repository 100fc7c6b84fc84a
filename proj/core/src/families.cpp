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

#include "alphageo/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alphageo {

double alpha_exp(double u, Alpha alpha) {
  if (alpha.is_one()) return std::exp(u);
  const double a = alpha.value();
  const double base = std::max(1.0 + (1.0 - a) * u, 0.0);
  // 0^(negative) is +infinity for alpha > 1, matching the extended range.
  return std::pow(base, 1.0 / (1.0 - a));
}

ConstraintFamily::ConstraintFamily(std::vector<std::string> labels,
                                   Eigen::MatrixXd rows,
                                   std::optional<Alpha> order)
    : labels_(std::move(labels)), rows_(std::move(rows)), order_(order) {
  if (rows_.rows() < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "a constraint family needs at least one function");
  }
  if (rows_.cols() != static_cast<Eigen::Index>(labels_.size())) {
    throw Error(ErrorCode::LengthMismatch,
                "constraint rows have " + std::to_string(rows_.cols()) +
                    " columns for " + std::to_string(labels_.size()) +
                    " labels");
  }
  if (!rows_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument,
                "constraint functions must be finite");
  }
  Eigen::FullPivHouseholderQR<Eigen::MatrixXd> qr(rows_.transpose());
  qr.setThreshold(1e-10);
  if (qr.rank() < rows_.rows()) {
    throw Error(ErrorCode::RankDeficient,
                "constraint rows are linearly dependent (rank " +
                    std::to_string(qr.rank()) + " < " +
                    std::to_string(rows_.rows()) + ")");
  }
}

ConstraintFamily ConstraintFamily::with_order(
    std::optional<Alpha> order) const {
  return ConstraintFamily(labels_, rows_, order);
}

std::string_view to_string(FamilyKind kind) {
  return kind == FamilyKind::PowerLaw ? "power-law" : "exponential";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "power-law") return FamilyKind::PowerLaw;
  if (name == "exponential") return FamilyKind::Exponential;
  throw Error(ErrorCode::ParseError,
              "family kind must be power-law or exponential, got '" +
                  std::string(name) + "'");
}

namespace {

void check_shapes(const FamilySpec& spec) {
  const auto m = static_cast<Eigen::Index>(spec.generator.size());
  if (spec.functions.cols() != m) {
    throw Error(ErrorCode::LengthMismatch,
                "family functions need one column per atom");
  }
  if (spec.functions.rows() != spec.theta.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "theta needs one entry per family function");
  }
}

double safe_pow(double x, double e) { return x > 0.0 ? std::pow(x, e) : 0.0; }

FamilyMember member_from_bracket(const FamilySpec& spec,
                                 const Eigen::VectorXd& bracket,
                                 double exponent) {
  std::vector<double> mass(static_cast<std::size_t>(bracket.size()));
  double total = 0.0;
  for (Eigen::Index x = 0; x < bracket.size(); ++x) {
    if (!(bracket(x) > 0.0)) {
      throw Error(ErrorCode::DomainViolation,
                  "bracket at atom '" +
                      spec.generator.labels()[static_cast<std::size_t>(x)] +
                      "' is " + std::to_string(bracket(x)) +
                      ", must be strictly positive");
    }
    mass[static_cast<std::size_t>(x)] = std::pow(bracket(x), exponent);
    total += mass[static_cast<std::size_t>(x)];
  }
  return {spec.generator.with_mass(std::move(mass)), total};
}

}  // namespace

Eigen::VectorXd family_bracket(const FamilySpec& spec) {
  check_shapes(spec);
  const double a = spec.alpha.value();
  const double q_exponent =
      spec.kind == FamilyKind::PowerLaw ? a - 1.0 : 1.0 - a;
  const Eigen::VectorXd tilt = spec.functions.transpose() * spec.theta;
  Eigen::VectorXd bracket(tilt.size());
  for (Eigen::Index x = 0; x < tilt.size(); ++x) {
    const double qx = spec.generator[static_cast<std::size_t>(x)];
    double base;
    if (qx > 0.0) {
      base = std::pow(qx, q_exponent);
    } else {
      // 0 to a negative power: the bracket is +infinity and the member
      // puts no mass on this atom.
      base = q_exponent > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    bracket(x) = base + (1.0 - a) * tilt(x);
  }
  return bracket;
}

FamilyMember power_law_member(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::PowerLaw) {
    throw Error(ErrorCode::InvalidArgument,
                "power_law_member needs a power-law spec");
  }
  if (spec.alpha.value() > 1.0 && !spec.generator.has_full_support()) {
    throw Error(ErrorCode::SupportViolation,
                "power-law generator must have full support when alpha > 1");
  }
  const double a = spec.alpha.value();
  return member_from_bracket(spec, family_bracket(spec), -1.0 / (1.0 - a));
}

FamilyMember exponential_member(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::Exponential) {
    throw Error(ErrorCode::InvalidArgument,
                "exponential_member needs an exponential spec");
  }
  const double a = spec.alpha.value();
  return member_from_bracket(spec, family_bracket(spec), 1.0 / (1.0 - a));
}

FamilyMember family_member(const FamilySpec& spec) {
  return spec.kind == FamilyKind::PowerLaw ? power_law_member(spec)
                                           : exponential_member(spec);
}

Eigen::VectorXd theta_transform(const Eigen::VectorXd& theta,
                                const FiniteDistribution& q, Alpha alpha) {
  const double a = alpha.value();
  const double scale = std::pow(alpha_pseudo_norm(q, alpha), a - 1.0);
  return (-a / scale) * theta;
}

namespace {

Eigen::VectorXd weighted_rows(const Eigen::MatrixXd& rows,
                              std::span<const double> weights) {
  const Eigen::Map<const Eigen::VectorXd> w(
      weights.data(), static_cast<Eigen::Index>(weights.size()));
  return rows * w;
}

void check_family_labels(const FiniteDistribution& p,
                         const ConstraintFamily& family) {
  if (p.labels() != family.labels()) {
    throw Error(ErrorCode::LabelMismatch,
                "distribution and constraint family use different alphabets");
  }
}

}  // namespace

Eigen::VectorXd linear_residual(const FiniteDistribution& p,
                                const ConstraintFamily& family) {
  check_family_labels(p, family);
  return weighted_rows(family.rows(), p.mass());
}

Eigen::VectorXd alpha_linear_residual(const FiniteDistribution& p,
                                      const ConstraintFamily& family,
                                      Alpha alpha) {
  check_family_labels(p, family);
  std::vector<double> powered(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    powered[x] = safe_pow(p[x], alpha.value());
  }
  return weighted_rows(family.rows(), powered);
}

Eigen::VectorXd family_residual(const FiniteDistribution& p,
                                const ConstraintFamily& family) {
  if (family.is_linear()) return linear_residual(p, family);
  return alpha_linear_residual(p, family, *family.order());
}

}  // namespace alphageo

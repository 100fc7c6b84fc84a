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

#include "alphageo/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace alphageo {

DivergenceValue DivergenceValue::finite(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument,
                "finite divergence value expected, got " +
                    std::to_string(value));
  }
  return DivergenceValue(false, std::max(value, 0.0));
}

double DivergenceValue::value() const {
  if (infinite_) {
    throw Error(ErrorCode::SupportViolation, "divergence is infinite");
  }
  return value_;
}

double DivergenceValue::as_double() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string_view to_string(DivergenceKind kind) {
  switch (kind) {
    case DivergenceKind::IAlpha: return "i-alpha";
    case DivergenceKind::Renyi: return "renyi";
    case DivergenceKind::KL: return "kl";
  }
  return "unknown";
}

DivergenceKind parse_divergence_kind(std::string_view name) {
  if (name == "i-alpha") return DivergenceKind::IAlpha;
  if (name == "renyi") return DivergenceKind::Renyi;
  if (name == "kl") return DivergenceKind::KL;
  throw Error(ErrorCode::ParseError,
              "divergence must be one of i-alpha, renyi, kl; got '" +
                  std::string(name) + "'");
}

namespace {

void require_same_length(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "divergence arguments have different lengths");
  }
}

// c * log(s) with s >= 0, mapping the degenerate sum s == 0 to +infinity when
// the sign of c makes the limit +infinity.
DivergenceValue scaled_log(double c, double s) {
  if (s > 0.0) return DivergenceValue::finite(c * std::log(s));
  if (c < 0.0) return DivergenceValue::infinite();
  // c > 0 and log(0) = -inf would be -infinity; cannot happen for
  // probability vectors, report as a support problem.
  throw Error(ErrorCode::SupportViolation, "degenerate divergence sum");
}

}  // namespace

DivergenceValue relative_alpha_entropy(std::span<const double> p,
                                       std::span<const double> q,
                                       Alpha alpha) {
  require_same_length(p, q);
  if (alpha.is_one()) return kl_divergence(p, q);
  const double a = alpha.value();
  const double norm_p = alpha_pseudo_norm(p, alpha);
  const double norm_q = alpha_pseudo_norm(q, alpha);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      if (a < 1.0) return DivergenceValue::infinite();
      continue;
    }
    sum += (p[i] / norm_p) * std::pow(q[i] / norm_q, a - 1.0);
  }
  return scaled_log(a / (1.0 - a), sum);
}

DivergenceValue relative_alpha_entropy(const FiniteDistribution& p,
                                       const FiniteDistribution& q,
                                       Alpha alpha) {
  require_same_labels(p, q);
  return relative_alpha_entropy(p.mass(), q.mass(), alpha);
}

DivergenceValue renyi_divergence(std::span<const double> p,
                                 std::span<const double> q, Alpha alpha) {
  require_same_length(p, q);
  if (alpha.is_one()) return kl_divergence(p, q);
  const double a = alpha.value();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      if (a > 1.0) return DivergenceValue::infinite();
      continue;
    }
    // p^a q^(1-a) written as q (p/q)^a keeps the ratio near one for close
    // arguments.
    sum += q[i] * std::pow(p[i] / q[i], a);
  }
  return scaled_log(1.0 / (a - 1.0), sum);
}

DivergenceValue renyi_divergence(const FiniteDistribution& p,
                                 const FiniteDistribution& q, Alpha alpha) {
  require_same_labels(p, q);
  return renyi_divergence(p.mass(), q.mass(), alpha);
}

DivergenceValue kl_divergence(std::span<const double> p,
                              std::span<const double> q) {
  require_same_length(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return DivergenceValue::infinite();
    sum += p[i] * std::log1p((p[i] - q[i]) / q[i]);
  }
  return DivergenceValue::finite(sum);
}

DivergenceValue kl_divergence(const FiniteDistribution& p,
                              const FiniteDistribution& q) {
  require_same_labels(p, q);
  return kl_divergence(p.mass(), q.mass());
}

DivergenceValue divergence(DivergenceKind kind, std::span<const double> p,
                           std::span<const double> q, Alpha alpha) {
  switch (kind) {
    case DivergenceKind::IAlpha: return relative_alpha_entropy(p, q, alpha);
    case DivergenceKind::Renyi: return renyi_divergence(p, q, alpha);
    case DivergenceKind::KL: return kl_divergence(p, q);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown divergence kind");
}

DivergenceValue divergence(DivergenceKind kind, const FiniteDistribution& p,
                           const FiniteDistribution& q, Alpha alpha) {
  require_same_labels(p, q);
  return divergence(kind, p.mass(), q.mass(), alpha);
}

double correspondence_gap(const FiniteDistribution& p,
                          const FiniteDistribution& q, Alpha alpha) {
  const auto direct = relative_alpha_entropy(p, q, alpha);
  const auto via_escort = renyi_divergence(escort(p, alpha), escort(q, alpha),
                                           alpha.reciprocal());
  if (direct.is_infinite() || via_escort.is_infinite()) {
    throw Error(ErrorCode::SupportViolation,
                "correspondence gap needs both divergences finite");
  }
  return std::abs(direct.value() - via_escort.value());
}

}  // namespace alphageo

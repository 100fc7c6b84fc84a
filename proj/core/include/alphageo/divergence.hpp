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

#include <span>
#include <string_view>

#include "alphageo/simplex.hpp"

namespace alphageo {

/// Extended nonnegative real: either a finite value >= 0 or +infinity.
class DivergenceValue {
 public:
  static DivergenceValue finite(double value);
  static DivergenceValue infinite() { return DivergenceValue(true, 0.0); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws SupportViolation when the value is infinite.
  double value() const;

  /// Finite value, or std::numeric_limits<double>::infinity().
  double as_double() const noexcept;

  friend bool operator==(const DivergenceValue&,
                         const DivergenceValue&) = default;

 private:
  DivergenceValue(bool infinite, double value)
      : infinite_(infinite), value_(value) {}
  bool infinite_;
  double value_;
};

enum class DivergenceKind { IAlpha, Renyi, KL };

std::string_view to_string(DivergenceKind kind);
/// Accepts "i-alpha", "renyi", "kl". Throws ParseError otherwise.
DivergenceKind parse_divergence_kind(std::string_view name);

// Support conventions, shared by the span and distribution overloads:
//  * terms with p(x) == 0 contribute nothing;
//  * Renyi, alpha > 1: p(x) > 0 with q(x) == 0 gives +infinity;
//  * Renyi, alpha < 1: q(x) == 0 terms contribute 0; an all-zero sum gives
//    +infinity (disjoint supports);
//  * relative alpha-entropy mirrors the Renyi divergence of order 1/alpha
//    between escorts, so alpha < 1 with p(x) > 0, q(x) == 0 is +infinity and
//    alpha > 1 is +infinity only when the sum vanishes;
//  * KL: p(x) > 0 with q(x) == 0 gives +infinity.
// Results are clamped at zero so rounding never produces negative values.

/// (alpha/(1-alpha)) log sum (p/||p||)(q/||q||)^(alpha-1), natural log.
DivergenceValue relative_alpha_entropy(std::span<const double> p,
                                       std::span<const double> q, Alpha alpha);
DivergenceValue relative_alpha_entropy(const FiniteDistribution& p,
                                       const FiniteDistribution& q,
                                       Alpha alpha);

/// (1/(alpha-1)) log sum p^alpha q^(1-alpha), natural log. The relaxed
/// alpha == 1 evaluates the KL divergence.
DivergenceValue renyi_divergence(std::span<const double> p,
                                 std::span<const double> q, Alpha alpha);
DivergenceValue renyi_divergence(const FiniteDistribution& p,
                                 const FiniteDistribution& q, Alpha alpha);

DivergenceValue kl_divergence(std::span<const double> p,
                              std::span<const double> q);
DivergenceValue kl_divergence(const FiniteDistribution& p,
                              const FiniteDistribution& q);

/// Dispatch on kind; alpha is ignored for KL.
DivergenceValue divergence(DivergenceKind kind, const FiniteDistribution& p,
                           const FiniteDistribution& q, Alpha alpha);
DivergenceValue divergence(DivergenceKind kind, std::span<const double> p,
                           std::span<const double> q, Alpha alpha);

/// |I_alpha(P,Q) - D_{1/alpha}(P^(alpha) || Q^(alpha))|.
///
/// Both sides must be finite; otherwise throws SupportViolation. Equal
/// infinities are not a gap but cannot be compared numerically either.
double correspondence_gap(const FiniteDistribution& p,
                          const FiniteDistribution& q, Alpha alpha);

}  // namespace alphageo

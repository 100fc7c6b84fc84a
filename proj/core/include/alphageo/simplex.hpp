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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "alphageo/errors.hpp"

namespace alphageo {

/// Absolute tolerance used for every post-construction invariant check on
/// probability vectors.
inline constexpr double kMassTolerance = 1e-12;

/// Order parameter shared by every divergence and transform.
///
/// The faithful constructor rejects alpha == 1. The KL limit is expressible
/// only through `Alpha::relaxed`, which admits exactly 1 as well.
class Alpha {
 public:
  /// Throws InvalidAlpha unless value > 0 and value != 1.
  explicit Alpha(double value);

  /// Same as the constructor but also admits value == 1.
  static Alpha relaxed(double value);

  double value() const noexcept { return value_; }
  bool is_one() const noexcept { return value_ == 1.0; }

  /// 1/alpha, keeping the relaxation state.
  Alpha reciprocal() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  struct RelaxedTag {};
  Alpha(double value, RelaxedTag) : value_(value) {}
  double value_;
};

/// Weight of an (alpha, lambda)-mixture. Restricted to the open interval (0,1).
class MixtureWeight {
 public:
  explicit MixtureWeight(double lambda);
  double value() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Probability mass function on a labeled finite alphabet.
///
/// Always holds at least two atoms, distinct labels, nonnegative masses that
/// sum to one. Construction renormalizes the input.
class FiniteDistribution {
 public:
  FiniteDistribution(std::vector<std::string> labels, std::vector<double> mass);

  /// Labels "x1", "x2", ... for anonymous vectors.
  static FiniteDistribution from_mass(std::vector<double> mass);
  static FiniteDistribution uniform(std::size_t size);
  static std::vector<std::string> default_labels(std::size_t size);

  std::size_t size() const noexcept { return mass_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const double> mass() const noexcept { return mass_; }
  double operator[](std::size_t i) const { return mass_[i]; }

  bool has_full_support() const noexcept;
  bool same_labels(const FiniteDistribution& other) const noexcept {
    return labels_ == other.labels_;
  }

  /// Builds a distribution on the same labels from an (unnormalized) vector.
  FiniteDistribution with_mass(std::vector<double> mass) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> mass_;
};

FiniteDistribution make_distribution(std::vector<std::string> labels,
                                     std::vector<double> mass);

/// Throws LabelMismatch unless both distributions live on the same alphabet.
void require_same_labels(const FiniteDistribution& a,
                         const FiniteDistribution& b);

/// (sum_x p(x)^alpha)^(1/alpha). Not a norm for alpha < 1; zero atoms are
/// skipped.
double alpha_pseudo_norm(std::span<const double> p, Alpha alpha);
double alpha_pseudo_norm(const FiniteDistribution& p, Alpha alpha);

/// Distance of the L^alpha space: the alpha-th root of sum |f-g|^alpha when
/// alpha > 1, the bare sum when alpha < 1.
double l_alpha_distance(std::span<const double> f, std::span<const double> g,
                        Alpha alpha);

/// Escort (alpha-scaled) distribution, p^alpha / sum p^alpha.
FiniteDistribution escort(const FiniteDistribution& p, Alpha alpha);

/// The unique P with escort(P, alpha) == pa, i.e. escort(pa, 1/alpha).
FiniteDistribution escort_inverse(const FiniteDistribution& pa, Alpha alpha);

/// Normalizer Z = sum (lambda p1^alpha + (1-lambda) p0^alpha)^(1/alpha).
/// Always lies in (0, 2] for probability inputs.
double mixture_normalizer(const FiniteDistribution& p0,
                          const FiniteDistribution& p1, Alpha alpha,
                          MixtureWeight w);

/// (alpha, lambda)-mixture of p0 and p1. Under the alpha == 1 relaxation this
/// is the ordinary convex combination lambda p1 + (1-lambda) p0.
FiniteDistribution alpha_lambda_mixture(const FiniteDistribution& p0,
                                        const FiniteDistribution& p1,
                                        Alpha alpha, MixtureWeight w);

/// lambda p1 + (1-lambda) p0.
FiniteDistribution convex_combination(const FiniteDistribution& p0,
                                      const FiniteDistribution& p1,
                                      MixtureWeight w);

/// lambda' = (lambda/norm1) / (lambda/norm1 + (1-lambda)/norm0).
///
/// With norm_k = ||p_k|| this converts a convex weight into the weight of
/// the (1/alpha)-mixture of escorts. Swapping the norms gives the dual
/// transform lambda''.
MixtureWeight mixture_weight_transform(MixtureWeight w, double norm0,
                                       double norm1);

}  // namespace alphageo

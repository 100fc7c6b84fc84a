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

#include "alphageo/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace alphageo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::NonpositiveNorm: return "NonpositiveNorm";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InfeasibleFamily: return "InfeasibleFamily";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::ObjectiveInfinite: return "ObjectiveInfinite";
    case ErrorCode::IndeterminateGap: return "IndeterminateGap";
    case ErrorCode::BoundaryViolation: return "BoundaryViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Alpha::Alpha(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value) || value == 1.0) {
    throw Error(ErrorCode::InvalidAlpha,
                "alpha must be positive, finite and different from 1, got " +
                    std::to_string(value));
  }
}

Alpha Alpha::relaxed(double value) {
  if (value == 1.0) return Alpha(value, RelaxedTag{});
  return Alpha(value);
}

Alpha Alpha::reciprocal() const {
  if (is_one()) return *this;
  return Alpha(1.0 / value_);
}

MixtureWeight::MixtureWeight(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::InvalidWeight,
                "mixture weight must lie in the open interval (0,1), got " +
                    std::to_string(lambda));
  }
}

FiniteDistribution::FiniteDistribution(std::vector<std::string> labels,
                                       std::vector<double> mass)
    : labels_(std::move(labels)), mass_(std::move(mass)) {
  if (labels_.size() != mass_.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "labels has " + std::to_string(labels_.size()) +
                    " entries but mass has " + std::to_string(mass_.size()));
  }
  if (mass_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "a distribution needs at least two atoms");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + label + "' repeats");
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    const double m = mass_[i];
    if (!std::isfinite(m)) {
      throw Error(ErrorCode::InvalidArgument,
                  "mass[" + std::to_string(i) + "] is not finite");
    }
    if (m < 0.0) {
      throw Error(ErrorCode::NegativeMass,
                  "mass[" + std::to_string(i) + "] = " + std::to_string(m));
    }
    total += m;
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::EmptySupport, "all masses are zero");
  }
  for (auto& m : mass_) m /= total;
}

FiniteDistribution FiniteDistribution::from_mass(std::vector<double> mass) {
  auto labels = default_labels(mass.size());
  return FiniteDistribution(std::move(labels), std::move(mass));
}

FiniteDistribution FiniteDistribution::uniform(std::size_t size) {
  return from_mass(std::vector<double>(size, 1.0));
}

std::vector<std::string> FiniteDistribution::default_labels(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
  }
  return labels;
}

bool FiniteDistribution::has_full_support() const noexcept {
  return std::all_of(mass_.begin(), mass_.end(),
                     [](double m) { return m > 0.0; });
}

FiniteDistribution FiniteDistribution::with_mass(
    std::vector<double> mass) const {
  return FiniteDistribution(labels_, std::move(mass));
}

FiniteDistribution make_distribution(std::vector<std::string> labels,
                                     std::vector<double> mass) {
  return FiniteDistribution(std::move(labels), std::move(mass));
}

void require_same_labels(const FiniteDistribution& a,
                         const FiniteDistribution& b) {
  if (!a.same_labels(b)) {
    throw Error(ErrorCode::LabelMismatch,
                "distributions are defined on different alphabets");
  }
}

namespace {

// 0^alpha is taken as 0 for every alpha > 0.
double power(double x, double a) { return x > 0.0 ? std::pow(x, a) : 0.0; }

std::vector<double> powered(std::span<const double> p, double a) {
  std::vector<double> out(p.size());
  std::transform(p.begin(), p.end(), out.begin(),
                 [a](double x) { return power(x, a); });
  return out;
}

}  // namespace

double alpha_pseudo_norm(std::span<const double> p, Alpha alpha) {
  const double a = alpha.value();
  double sum = 0.0;
  for (double x : p) sum += power(x, a);
  return std::pow(sum, 1.0 / a);
}

double alpha_pseudo_norm(const FiniteDistribution& p, Alpha alpha) {
  return alpha_pseudo_norm(p.mass(), alpha);
}

double l_alpha_distance(std::span<const double> f, std::span<const double> g,
                        Alpha alpha) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "l_alpha_distance needs vectors of equal length");
  }
  const double a = alpha.value();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += power(std::abs(f[i] - g[i]), a);
  return a > 1.0 ? std::pow(sum, 1.0 / a) : sum;
}

FiniteDistribution escort(const FiniteDistribution& p, Alpha alpha) {
  // Uniform on its support is a fixed point; return it bit-for-bit.
  const auto mass = p.mass();
  double level = 0.0;
  bool flat = true;
  for (double m : mass) {
    if (m == 0.0) continue;
    if (level == 0.0) level = m;
    if (m != level) {
      flat = false;
      break;
    }
  }
  if (flat) return p;
  return p.with_mass(powered(mass, alpha.value()));
}

FiniteDistribution escort_inverse(const FiniteDistribution& pa, Alpha alpha) {
  return escort(pa, alpha.reciprocal());
}

namespace {

std::vector<double> mixture_density(const FiniteDistribution& p0,
                                    const FiniteDistribution& p1, Alpha alpha,
                                    MixtureWeight w) {
  require_same_labels(p0, p1);
  const double a = alpha.value();
  const double lambda = w.value();
  std::vector<double> out(p0.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double blend =
        lambda * power(p1[i], a) + (1.0 - lambda) * power(p0[i], a);
    out[i] = power(blend, 1.0 / a);
  }
  return out;
}

}  // namespace

double mixture_normalizer(const FiniteDistribution& p0,
                          const FiniteDistribution& p1, Alpha alpha,
                          MixtureWeight w) {
  const auto density = mixture_density(p0, p1, alpha, w);
  return std::accumulate(density.begin(), density.end(), 0.0);
}

FiniteDistribution alpha_lambda_mixture(const FiniteDistribution& p0,
                                        const FiniteDistribution& p1,
                                        Alpha alpha, MixtureWeight w) {
  return p0.with_mass(mixture_density(p0, p1, alpha, w));
}

FiniteDistribution convex_combination(const FiniteDistribution& p0,
                                      const FiniteDistribution& p1,
                                      MixtureWeight w) {
  return alpha_lambda_mixture(p0, p1, Alpha::relaxed(1.0), w);
}

MixtureWeight mixture_weight_transform(MixtureWeight w, double norm0,
                                       double norm1) {
  if (!(norm0 > 0.0) || !(norm1 > 0.0)) {
    throw Error(ErrorCode::NonpositiveNorm,
                "pseudo-norms must be strictly positive");
  }
  const double a = w.value() / norm1;
  const double b = (1.0 - w.value()) / norm0;
  return MixtureWeight(a / (a + b));
}

}  // namespace alphageo

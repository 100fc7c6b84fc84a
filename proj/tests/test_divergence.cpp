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

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "support.hpp"

namespace {

using namespace alphageo;
using testing_support::dist;
using testing_support::masses;

FiniteDistribution random_interior(std::mt19937_64& rng, std::size_t size) {
  std::uniform_real_distribution<double> u(0.02, 1.0);
  std::vector<double> mass(size);
  for (double& m : mass) m = u(rng);
  return FiniteDistribution::from_mass(std::move(mass));
}

TEST(DivergenceValueType, FiniteAndInfinite) {
  EXPECT_DOUBLE_EQ(DivergenceValue::finite(0.25).value(), 0.25);
  EXPECT_EQ(DivergenceValue::finite(-1e-17).value(), 0.0);
  EXPECT_TRUE(DivergenceValue::infinite().is_infinite());
  EXPECT_TRUE(std::isinf(DivergenceValue::infinite().as_double()));
  EXPECT_ERROR_CODE(DivergenceValue::infinite().value(),
                    ErrorCode::SupportViolation);
}

TEST(DivergenceKindNames, RoundTrip) {
  for (auto kind : {DivergenceKind::IAlpha, DivergenceKind::Renyi,
                    DivergenceKind::KL}) {
    EXPECT_EQ(parse_divergence_kind(to_string(kind)), kind);
  }
  EXPECT_ERROR_CODE(parse_divergence_kind("hellinger"), ErrorCode::ParseError);
}

TEST(RelativeAlphaEntropy, ZeroOnEqualArguments) {
  const auto p = dist({0.2, 0.3, 0.5});
  for (double a : {0.3, 0.5, 2.0, 4.0}) {
    EXPECT_NEAR(relative_alpha_entropy(p, p, Alpha(a)).value(), 0.0, 1e-15);
  }
}

TEST(RelativeAlphaEntropy, HandEvaluatedPair) {
  const double v =
      relative_alpha_entropy(dist({2.0 / 3, 1.0 / 3}), dist({0.5, 0.5}), Alpha(2))
          .value();
  EXPECT_NEAR(v, std::log(10.0 / 9.0), 1e-12);
  EXPECT_NEAR(v, 0.10536051565782628, 1e-12);
}

TEST(RelativeAlphaEntropy, MatchesOracle) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_interior(rng, 2 + t % 5);
    const auto q = random_interior(rng, p.size());
    for (double a : {0.3, 0.5, 2.0, 4.0}) {
      const long double expected = oracle::relative_alpha_entropy(
          oracle::from_double(masses(p)), oracle::from_double(masses(q)), a);
      EXPECT_NEAR(relative_alpha_entropy(p, q, Alpha(a)).value(),
                  static_cast<double>(expected), 1e-13);
    }
  }
}

TEST(RelativeAlphaEntropy, EqualsRenyiOfEscortsAtReciprocalOrder) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_interior(rng, 3);
    const auto q = random_interior(rng, 3);
    const Alpha half(0.5);
    EXPECT_NEAR(relative_alpha_entropy(p, q, half).value(),
                renyi_divergence(escort(p, half), escort(q, half), Alpha(2)).value(),
                1e-12);
  }
}

TEST(RelativeAlphaEntropy, SupportConventions) {
  const auto p = dist({0.5, 0.5});
  const auto q = dist({1, 0});
  // Order below one: P charges an atom that Q does not.
  EXPECT_TRUE(relative_alpha_entropy(p, q, Alpha(0.5)).is_infinite());
  // Order above one: the zero atom of Q drops out of the sum.
  const auto v = relative_alpha_entropy(p, q, Alpha(2));
  ASSERT_TRUE(v.is_finite());
  EXPECT_NEAR(v.value(),
              renyi_divergence(escort(p, Alpha(2)), escort(q, Alpha(2)),
                               Alpha(0.5))
                  .value(),
              1e-12);
  // Disjoint supports at order above one.
  EXPECT_TRUE(
      relative_alpha_entropy(dist({1, 0}), dist({0, 1}), Alpha(2)).is_infinite());
}

TEST(RelativeAlphaEntropy, LabelMismatch) {
  EXPECT_ERROR_CODE(
      relative_alpha_entropy(make_distribution({"a", "b"}, {1, 1}),
                             make_distribution({"b", "a"}, {1, 1}), Alpha(2)),
      ErrorCode::LabelMismatch);
}

TEST(Renyi, ZeroOnEqualArguments) {
  const auto p = dist({0.1, 0.6, 0.3});
  EXPECT_NEAR(renyi_divergence(p, p, Alpha(0.5)).value(), 0.0, 1e-15);
  EXPECT_NEAR(renyi_divergence(p, p, Alpha(3)).value(), 0.0, 1e-15);
}

TEST(Renyi, PointMassAgainstUniform) {
  EXPECT_NEAR(renyi_divergence(dist({1, 0}), dist({0.5, 0.5}), Alpha(0.5)).value(),
              std::log(2.0), 1e-15);
}

TEST(Renyi, HandEvaluatedEscortPair) {
  EXPECT_NEAR(renyi_divergence(dist({0.8, 0.2}), dist({0.5, 0.5}), Alpha(0.5))
                  .value(),
              std::log(10.0 / 9.0), 1e-12);
}

TEST(Renyi, InfiniteWhenPChargesQZeroAboveOne) {
  const auto v = renyi_divergence(dist({0.5, 0.5}), dist({1, 0}), Alpha(2));
  EXPECT_TRUE(v.is_infinite());
  EXPECT_FALSE(std::isnan(v.as_double()));
}

TEST(Renyi, BelowOneZeroAtomsContributeNothing) {
  const auto v = renyi_divergence(dist({0.5, 0.5}), dist({1, 0}), Alpha(0.5));
  ASSERT_TRUE(v.is_finite());
  EXPECT_NEAR(v.value(), -2.0 * std::log(std::sqrt(0.5)), 1e-15);
  EXPECT_TRUE(renyi_divergence(dist({1, 0}), dist({0, 1}), Alpha(0.5)).is_infinite());
}

TEST(Renyi, MatchesOracle) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_interior(rng, 2 + t % 5);
    const auto q = random_interior(rng, p.size());
    for (double a : {0.3, 0.5, 2.0, 4.0}) {
      EXPECT_NEAR(renyi_divergence(p, q, Alpha(a)).value(),
                  static_cast<double>(oracle::renyi(
                      oracle::from_double(masses(p)),
                      oracle::from_double(masses(q)), a)),
                  1e-13);
    }
  }
}

TEST(Renyi, RelaxedOrderOneIsKl) {
  const auto p = dist({0.8, 0.2});
  const auto q = dist({0.5, 0.5});
  EXPECT_DOUBLE_EQ(renyi_divergence(p, q, Alpha::relaxed(1.0)).value(),
                   kl_divergence(p, q).value());
}

TEST(Kl, Examples) {
  const auto p = dist({0.8, 0.2});
  EXPECT_EQ(kl_divergence(p, p).value(), 0.0);
  EXPECT_NEAR(kl_divergence(p, dist({0.5, 0.5})).value(),
              0.8 * std::log(1.6) + 0.2 * std::log(0.4), 1e-15);
  EXPECT_NEAR(kl_divergence(p, dist({0.5, 0.5})).value(), 0.19274475702175758,
              1e-12);
  EXPECT_TRUE(kl_divergence(dist({0.5, 0.5}), dist({1, 0})).is_infinite());
  EXPECT_NEAR(kl_divergence(dist({1, 0}), dist({0.5, 0.5})).value(),
              std::log(2.0), 1e-15);
}

TEST(Kl, LimitOfRenyiProperty) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_interior(rng, 2 + t % 5);
    const auto q = random_interior(rng, p.size());
    const double kl = kl_divergence(p, q).value();
    EXPECT_NEAR(static_cast<double>(oracle::kl(oracle::from_double(masses(p)),
                                               oracle::from_double(masses(q)))),
                kl, 1e-13);
    double previous = INFINITY;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const double err =
          std::max(std::abs(renyi_divergence(p, q, Alpha(1 - h)).value() - kl),
                   std::abs(renyi_divergence(p, q, Alpha(1 + h)).value() - kl));
      EXPECT_LT(err, previous);
      previous = err;
    }
    EXPECT_LE(previous, 1e-3);
  }
}

TEST(CorrespondenceGap, Examples) {
  const auto p = dist({0.3, 0.3, 0.4});
  EXPECT_LE(correspondence_gap(p, p, Alpha(2)), 1e-15);
  EXPECT_LE(correspondence_gap(dist({2.0 / 3, 1.0 / 3}), dist({0.5, 0.5}), Alpha(2)),
            1e-10);
}

TEST(CorrespondenceGap, InfiniteSidesAreRejected) {
  EXPECT_ERROR_CODE(correspondence_gap(dist({0.5, 0.5}), dist({1, 0}), Alpha(0.5)),
                    ErrorCode::SupportViolation);
}

TEST(CorrespondenceGap, RandomPairsProperty) {
  std::mt19937_64 rng(41);
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto p = random_interior(rng, 2 + t % 5);
    const auto q = random_interior(rng, p.size());
    for (double a : {0.3, 0.5, 2.0, 4.0}) {
      worst = std::max(worst, correspondence_gap(p, q, Alpha(a)));
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Divergences, NonnegativeAndNeverNan) {
  std::mt19937_64 rng(43);
  std::bernoulli_distribution zero(0.3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t m = 2 + t % 4;
    std::vector<double> pm(m);
    std::vector<double> qm(m);
    for (std::size_t i = 0; i < m; ++i) {
      pm[i] = zero(rng) ? 0.0 : u(rng) + 0.01;
      qm[i] = zero(rng) ? 0.0 : u(rng) + 0.01;
    }
    pm[0] += 0.1;
    qm[m - 1] += 0.1;
    const auto p = FiniteDistribution::from_mass(pm);
    const auto q = FiniteDistribution::from_mass(qm);
    for (double a : {0.3, 0.5, 2.0, 4.0}) {
      for (auto kind : {DivergenceKind::IAlpha, DivergenceKind::Renyi,
                        DivergenceKind::KL}) {
        const double v = divergence(kind, p, q, Alpha(a)).as_double();
        EXPECT_FALSE(std::isnan(v));
        EXPECT_GE(v, 0.0);
      }
    }
  }
}

TEST(Divergences, PositiveOffTheDiagonal) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_interior(rng, 3);
    const auto q = random_interior(rng, 3);
    for (double a : {0.5, 2.0}) {
      EXPECT_GT(relative_alpha_entropy(p, q, Alpha(a)).value(), 0.0);
      EXPECT_GT(renyi_divergence(p, q, Alpha(a)).value(), 0.0);
    }
    EXPECT_GT(kl_divergence(p, q).value(), 0.0);
  }
}

}  // namespace

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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "alphageo/alphageo.hpp"

namespace {

using namespace alphageo;

FiniteDistribution random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> mass(n);
  for (double& m : mass) m = u(rng);
  return FiniteDistribution::from_mass(std::move(mass));
}

void BM_RelativeAlphaEntropy(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_distribution(rng, n);
  const auto q = random_distribution(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relative_alpha_entropy(p, q, Alpha(2)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RelativeAlphaEntropy)->RangeMultiplier(8)->Range(8, 4096);

void BM_RenyiDivergence(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_distribution(rng, n);
  const auto q = random_distribution(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi_divergence(p, q, Alpha(0.5)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RenyiDivergence)->RangeMultiplier(8)->Range(8, 4096);

void BM_Escort(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto p = random_distribution(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(escort(p, Alpha(3)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Escort)->RangeMultiplier(8)->Range(8, 4096);

void BM_CorrespondenceGap(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_distribution(rng, n);
  const auto q = random_distribution(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(correspondence_gap(p, q, Alpha(0.7)));
  }
}
BENCHMARK(BM_CorrespondenceGap)->Arg(16)->Arg(256);

}  // namespace

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

#include <vector>

#include <benchmark/benchmark.h>

#include "alphageo/alphageo.hpp"

namespace {

using namespace alphageo;

std::vector<double> center_phi(int n) {
  return std::vector<double>(static_cast<std::size_t>(n), 1.0 / (n + 1));
}

void BM_EguchiMetricFd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto phi = center_phi(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eguchi_metric_fd(DivergenceKind::IAlpha, Alpha(2), SimplexChart(n), phi));
  }
}
BENCHMARK(BM_EguchiMetricFd)->Arg(1)->Arg(4)->Arg(16);

void BM_FisherInformation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto phi = center_phi(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fisher_information(SimplexChart(n), phi));
  }
}
BENCHMARK(BM_FisherInformation)->Arg(1)->Arg(4)->Arg(16);

void BM_EscortChartCheck(benchmark::State& state) {
  const auto phi = center_phi(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        escort_chart_metric_check(SimplexChart(3), phi, Alpha(0.5)));
  }
}
BENCHMARK(BM_EscortChartCheck);

}  // namespace

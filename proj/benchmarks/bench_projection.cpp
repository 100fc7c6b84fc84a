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

#include <benchmark/benchmark.h>

#include "alphageo/alphageo.hpp"

namespace {

using namespace alphageo;

ProjectionProblem three_atom_problem(DivergenceKind kind, double alpha) {
  Eigen::MatrixXd rows(1, 3);
  rows << 1, 1, -1;
  const auto target = FiniteDistribution::from_mass({0.5, 0.3, 0.2});
  auto family = kind == DivergenceKind::Renyi
                    ? ConstraintFamily(target.labels(), rows, Alpha(alpha))
                    : ConstraintFamily(target.labels(), rows);
  return ProjectionProblem{target, family, kind, Alpha(alpha)};
}

ProjectionProblem wide_problem(int n) {
  Eigen::MatrixXd rows(2, n);
  std::vector<double> mass;
  for (int i = 0; i < n; ++i) {
    rows(0, i) = i % 2 == 0 ? 1.0 : -1.0;
    rows(1, i) = static_cast<double>(i) / n - 0.5;
    mass.push_back(1.0 + 0.1 * i);
  }
  const auto target = FiniteDistribution::from_mass(std::move(mass));
  return ProjectionProblem{target, ConstraintFamily(target.labels(), rows),
                           DivergenceKind::IAlpha, Alpha(2)};
}

void BM_ProjectIAlphaLinear(benchmark::State& state) {
  const auto problem = three_atom_problem(DivergenceKind::IAlpha, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(project(problem));
}
BENCHMARK(BM_ProjectIAlphaLinear);

void BM_ProjectRenyiAlphaLinear(benchmark::State& state) {
  const auto problem = three_atom_problem(DivergenceKind::Renyi, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(project(problem));
}
BENCHMARK(BM_ProjectRenyiAlphaLinear);

void BM_ProjectWide(benchmark::State& state) {
  const auto problem = wide_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(project(problem));
}
BENCHMARK(BM_ProjectWide)->Arg(8)->Arg(32)->Arg(128);

void BM_GridOracle(benchmark::State& state) {
  const auto problem = three_atom_problem(DivergenceKind::IAlpha, 2.0);
  const double resolution = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_grid_oracle(problem, resolution));
  }
}
BENCHMARK(BM_GridOracle)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

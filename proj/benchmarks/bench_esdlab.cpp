// Copyright 2026 The esdlab Authors
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

#include <numbers>

#include "esdlab/closed_form.hpp"
#include "esdlab/entanglement.hpp"
#include "esdlab/liouville.hpp"

namespace {

using namespace esdlab;

EnvironmentSpec environment(int model) {
  EnvironmentSpec e;
  e.model = static_cast<EnvironmentModel>(model);
  e.gamma_a = e.gamma_b = 1.0;
  e.big_gamma_a = e.big_gamma_b = 1.0;
  if (e.model == EnvironmentModel::CorrelatedDecay) e.gamma_corr = 0.8;
  if (e.model == EnvironmentModel::CorrelatedDephasing) e.gamma0 = 0.2;
  return e;
}

const DensityMatrix& initial() {
  static const DensityMatrix rho = build_initial_density(InitialStateParams::one_parameter(0.4, std::numbers::pi / 2));
  return rho;
}

// Full trajectory over [0, 5] with 2001 samples; arg selects the model.
void BM_Evolve(benchmark::State& state) {
  const EnvironmentSpec env = environment(static_cast<int>(state.range(0)));
  const std::vector<double> grid = uniform_grid(5.0, 2001);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(initial(), {0.0, 5.0}, env, grid));
}
BENCHMARK(BM_Evolve)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AnalyticTrajectory(benchmark::State& state) {
  const EnvironmentSpec env = environment(static_cast<int>(state.range(0)));
  const std::vector<double> grid = uniform_grid(5.0, 2001);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form::analytic_trajectory(initial(), {0.0, 5.0}, env, grid));
}
BENCHMARK(BM_AnalyticTrajectory)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Wootters(benchmark::State& state) {
  const DensityMatrix rho = closed_form::propagate(initial(), {0.0, 5.0}, environment(0), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_wootters(rho));
}
BENCHMARK(BM_Wootters);

void BM_XState(benchmark::State& state) {
  const DensityMatrix rho = closed_form::propagate(initial(), {0.0, 5.0}, environment(0), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_xstate(rho));
}
BENCHMARK(BM_XState);

void BM_ConcurrenceCorrelatedDecay(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form::concurrence_correlated_decay(0.4, 0.7, 1.0, 0.8, 5.0, t));
    t = t < 5.0 ? t + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_ConcurrenceCorrelatedDecay);

void BM_Analyze(benchmark::State& state) {
  const SystemParams p{0.0, 5.0};
  const Trajectory tr = closed_form::analytic_trajectory(initial(), p, environment(0), uniform_grid(5.0, 2001));
  const CtildeEvaluator f = closed_form::ctilde_evaluator(initial(), p, environment(0));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(tr, kDefaultZeroTol, f));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

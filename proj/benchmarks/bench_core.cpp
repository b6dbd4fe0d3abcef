// Copyright 2026 The proxeq authors
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

#include "proxeq/problems.hpp"
#include "proxeq/solver.hpp"

using namespace proxeq;

static void BM_SimplexProjection(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  auto set = FeasibleSet::simplex(dim);
  std::mt19937_64 rng(1);
  Point x(dim);
  for (auto& v : x) v = normal01(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(set.project(x));
  }
}
BENCHMARK(BM_SimplexProjection)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Bregman(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  auto setup = entropy_setup();
  auto set = FeasibleSet::simplex(dim);
  std::mt19937_64 rng(2);
  Point x = set.sample(rng), y = set.sample(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bregman(setup, x, y));
  }
}
BENCHMARK(BM_Bregman)->Arg(10)->Arg(1000);

static void BM_LinearBregmanStep(benchmark::State& state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  auto set = FeasibleSet::simplex(dim);
  auto setup = entropy_setup();
  std::mt19937_64 rng(3);
  Point c(dim);
  for (auto& v : c) v = normal01(rng);
  Point center = set.sample(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_bregman_step(set, setup, c, nullptr, 2.0, center, 0.0));
  }
}
BENCHMARK(BM_LinearBregmanStep)->Arg(10)->Arg(1000);

static void BM_SolveMatrixGame(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  std::mt19937_64 rng(4);
  for (auto& v : m.data) v = uniform(rng, -1.0, 1.0);
  auto saddle = matrix_game(m);
  auto set = matrix_game_set(m);
  SolverConfig config;
  config.epsilon = 1e-2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(saddle.base, set, entropy_setup(), config));
  }
}
BENCHMARK(BM_SolveMatrixGame)->Arg(5)->Arg(20);

static void BM_DistanceSumIteration(benchmark::State& state) {
  auto inst = fts_reference_instance(20);
  auto saddle = fts_saddle(inst);
  auto set = fts_feasible_set(inst);
  SolverConfig config;
  config.epsilon = 0.5;
  config.x0_override = fts_initial_point(inst);
  config.max_outer_iterations = 10;
  EquilibriumModel model = saddle.base;
  model.delta = 0.25;
  for (auto _ : state) {
    auto trace = run(model, set, euclidean_setup(), config);
    state.counters["prox_calls"] = static_cast<double>(trace.total_prox_calls);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_DistanceSumIteration);

BENCHMARK_MAIN();

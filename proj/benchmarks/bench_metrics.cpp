// Copyright 2026 The qig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qig/channel.hpp"
#include "qig/inequalities.hpp"
#include "qig/metric.hpp"
#include "qig/random.hpp"
#include "qig/sampling.hpp"

using namespace qig;

static void BM_MetricContext(benchmark::State& state) {
  const Index n = state.range(0);
  RngStream rng(1);
  DensityMatrix d = random_density(n, rng);
  StandardFunction f = StandardFunction::wy();
  for (auto _ : state) {
    MetricContext ctx(d, f);
    benchmark::DoNotOptimize(ctx.kernel().data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MetricContext)->Arg(4)->Arg(16)->Arg(64)->Complexity();

static void BM_Gamma(benchmark::State& state) {
  const Index n = state.range(0);
  RngStream rng(2);
  DensityMatrix d = random_density(n, rng);
  Observable a = random_observable(n, rng);
  Observable b = random_observable(n, rng);
  MetricContext ctx(d, StandardFunction::kosaki(0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(ctx, a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Gamma)->Arg(4)->Arg(16)->Arg(64)->Complexity();

static void BM_QCov(benchmark::State& state) {
  const Index n = state.range(0);
  RngStream rng(3);
  DensityMatrix d = random_density(n, rng);
  Observable a = random_observable(n, rng);
  Observable b = random_observable(n, rng);
  MetricContext ctx(d, StandardFunction::km());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcov(ctx, a, b));
  }
}
BENCHMARK(BM_QCov)->Arg(4)->Arg(16)->Arg(64);

static void BM_SkewInformation(benchmark::State& state) {
  const Index n = state.range(0);
  RngStream rng(4);
  DensityMatrix d = random_density(n, rng);
  Observable a = random_observable(n, rng);
  MetricContext ctx(d, StandardFunction::wy());
  for (auto _ : state) {
    benchmark::DoNotOptimize(skew_information(ctx, a, a));
  }
}
BENCHMARK(BM_SkewInformation)->Arg(4)->Arg(16)->Arg(64);

static void BM_DetBound(benchmark::State& state) {
  const Index n = state.range(0);
  const int m = static_cast<int>(state.range(1));
  RngStream rng(5);
  DensityMatrix d = random_density(n, rng);
  std::vector<Observable> a = random_observable_tuple(n, m, rng);
  StandardFunction f = StandardFunction::wy();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_dynamical_ucp(f, d, a));
  }
}
BENCHMARK(BM_DetBound)->Args({3, 2})->Args({4, 3})->Args({8, 3});

static void BM_FisherMonotonicity(benchmark::State& state) {
  const Index n = state.range(0);
  RngStream rng(6);
  KrausChannel ch = random_channel(n, n, 2, rng);
  DensityMatrix d = random_density(n, rng);
  Observable a = random_observable(n, rng);
  Observable dir = a - (a.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
  StandardFunction f = StandardFunction::sld();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_fisher_monotonicity(f, ch, d, dir));
  }
}
BENCHMARK(BM_FisherMonotonicity)->Arg(4)->Arg(8);

BENCHMARK_MAIN();

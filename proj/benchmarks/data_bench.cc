// Copyright 2026 The tspkit Authors.
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

#include "tspkit/data.h"
#include "tspkit/tour.h"

namespace tspkit {
namespace {

void BM_Generate(benchmark::State& state) {
  const GeneratorConfig config{.n = state.range(0), .extent = 4000, .seed = 3};
  for (auto _ : state) benchmark::DoNotOptimize(GenerateRandom(config).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Generate)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

void BM_WriteParse(benchmark::State& state) {
  const Instance inst = GenerateRandom({.n = state.range(0), .extent = 4000, .seed = 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ParseInstance(WriteInstance(inst), "bench").size());
  }
}
BENCHMARK(BM_WriteParse)->Arg(1000)->Arg(10000);

void BM_TourLength(benchmark::State& state) {
  const Instance inst = GenerateRandom({.n = state.range(0), .extent = 4000, .seed = 3});
  Tour tour;
  for (int i = 0; i < state.range(0); ++i) tour.order.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(TourLength(inst, tour));
}
BENCHMARK(BM_TourLength)->Arg(200)->Arg(10000);

}  // namespace
}  // namespace tspkit

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

#include <numeric>

#include <fmt/format.h>

#include "stopwatch.h"
#include "tspkit/error.h"
#include "tspkit/solvers.h"

namespace tspkit {

SolveResult RandomTour(const DistanceTable& table, Seed seed) {
  const std::size_t n = table.size();
  if (n < 2) throw DomainError(fmt::format("random tour needs n >= 2, got {}", n));
  Stopwatch watch;
  Rng rng(seed);
  SolveResult result;
  result.algorithm = "random";
  result.seed = seed;
  result.tour.order.resize(n);
  std::iota(result.tour.order.begin(), result.tour.order.end(), 0);
  rng.Shuffle(std::span<int>(result.tour.order));
  result.length = table.Length(result.tour.order);
  result.wall_time_s = watch.Seconds();
  return result;
}

SolveResult RandomTour(const Instance& inst, Seed seed) {
  return RandomTour(DistanceTable(inst), seed);
}

}  // namespace tspkit

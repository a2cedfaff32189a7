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

#include <algorithm>

#include <fmt/format.h>

#include "stopwatch.h"
#include "tspkit/error.h"
#include "tspkit/solvers.h"
#include "two_opt_internal.h"

namespace tspkit {
namespace {

struct Move {
  std::size_t i = 0;
  std::size_t k = 0;
  double delta = 0.0;
};

// Change in length from reversing order[i..k]: two edges removed, two added.
inline double MoveDelta(const DistanceTable& table, const std::vector<int>& t,
                        std::size_t i, std::size_t k) {
  const std::size_t n = t.size();
  const int a = t[i - 1];
  const int b = t[i];
  const int c = t[k];
  const int d = t[(k + 1) % n];
  return table(a, c) + table(b, d) - table(a, b) - table(c, d);
}

bool FirstImprovingMove(const DistanceTable& table, const std::vector<int>& t,
                        Move& move) {
  const std::size_t n = t.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double delta = MoveDelta(table, t, i, k);
      if (delta < -kTwoOptMinGain) {
        move = {i, k, delta};
        return true;
      }
    }
  }
  return false;
}

bool BestImprovingMove(const DistanceTable& table, const std::vector<int>& t,
                       Move& move) {
  const std::size_t n = t.size();
  bool found = false;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double delta = MoveDelta(table, t, i, k);
      if (delta < -kTwoOptMinGain && (!found || delta < move.delta)) {
        move = {i, k, delta};
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

void TwoOptParams::Validate() const {
  if (max_passes && *max_passes < 1) {
    throw ConfigError("max_passes",
                      fmt::format("must be >= 1 when bounded, got {}", *max_passes));
  }
}

namespace internal {

std::int64_t ImproveTwoOpt(const DistanceTable& table, std::vector<int>& order,
                           const TwoOptParams& params) {
  const bool first = params.strategy == TwoOptStrategy::kFirstImprovement;
  std::int64_t passes = 0;
  while (!params.max_passes || passes < *params.max_passes) {
    ++passes;
    Move move;
    const bool improved = first ? FirstImprovingMove(table, order, move)
                                : BestImprovingMove(table, order, move);
    if (!improved) break;
    std::reverse(order.begin() + move.i, order.begin() + move.k + 1);
  }
  return passes;
}

}  // namespace internal

SolveResult TwoOpt(const DistanceTable& table, const Tour& initial,
                   const TwoOptParams& params) {
  params.Validate();
  if (auto violation = ValidateTour(table.size(), initial)) {
    throw ValidationError("invalid initial tour: " + *violation);
  }
  Stopwatch watch;
  SolveResult result;
  result.algorithm = "two_opt";
  result.tour.order = initial.order;
  result.iterations = internal::ImproveTwoOpt(table, result.tour.order, params);
  result.length = table.Length(result.tour.order);
  result.wall_time_s = watch.Seconds();
  return result;
}

SolveResult TwoOpt(const Instance& inst, const Tour& initial,
                   const TwoOptParams& params) {
  return TwoOpt(DistanceTable(inst), initial, params);
}

}  // namespace tspkit

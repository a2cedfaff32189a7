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
#include <numeric>
#include <vector>

#include <fmt/format.h>

#include "stopwatch.h"
#include "tspkit/counting.h"
#include "tspkit/error.h"
#include "tspkit/solvers.h"

namespace tspkit {

SolveResult ExactTour(const DistanceTable& table) {
  const std::size_t n = table.size();
  if (n < 3) throw DomainError(fmt::format("exact search needs n >= 3, got {}", n));
  if (n > kExactMaxCities) {
    const BigInt factorial = CountTours(static_cast<std::int64_t>(n)) * 2;
    throw RefusalError(fmt::format(
        "n={} exceeds the exhaustive search cap of {} cities: "
        "(n-1)!/2 = {}/2 = {} tours",
        n, kExactMaxCities, factorial.str(),
        CountTours(static_cast<std::int64_t>(n)).str()));
  }
  Stopwatch watch;

  // City 0 is fixed first; rest[] ranges over permutations of 1..n-1 in
  // lexicographic order, keeping one direction per cycle.
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> best_rest;
  double best = 0.0;
  do {
    if (rest.front() > rest.back()) continue;
    double length = table(0, rest.front()) + table(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      length += table(rest[i], rest[i + 1]);
    }
    if (best_rest.empty() || length < best) {
      best = length;
      best_rest = rest;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  SolveResult result;
  result.algorithm = "exact";
  result.tour.order.push_back(0);
  result.tour.order.insert(result.tour.order.end(), best_rest.begin(),
                           best_rest.end());
  result.length = table.Length(result.tour.order);
  result.iterations = 0;
  result.wall_time_s = watch.Seconds();
  return result;
}

SolveResult ExactTour(const Instance& inst) {
  return ExactTour(DistanceTable(inst));
}

}  // namespace tspkit

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

#ifndef TSPKIT_SOLVERS_H_
#define TSPKIT_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspkit/geometry.h"
#include "tspkit/random.h"
#include "tspkit/tour.h"

namespace tspkit {

struct SolveResult {
  std::string algorithm;
  Tour tour;
  double length = 0.0;
  double wall_time_s = 0.0;
  std::optional<Seed> seed;
  // Passes for two_opt, generations for genetic, 0 for constructive methods.
  std::int64_t iterations = 0;
};

// Uniformly random permutation (Fisher-Yates). The random-path baseline.
// Requires n >= 2.
SolveResult RandomTour(const DistanceTable& table, Seed seed);
SolveResult RandomTour(const Instance& inst, Seed seed);

// Greedy edge construction. Every edge is considered once in ascending
// (weight, min endpoint, max endpoint) order; an edge is accepted when both
// endpoints still have degree < 2 and it does not close a cycle early. The
// last accepted edge closes the Hamiltonian cycle. Requires n >= 3.
struct GreedyEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

// Called once per accepted edge, with the number of edges accepted so far
// (including this one). Intended for tests.
using GreedyObserver = std::function<void(const GreedyEdge&, std::size_t)>;

SolveResult GreedyTour(const DistanceTable& table,
                       const GreedyObserver& observer = {});
SolveResult GreedyTour(const Instance& inst);

enum class TwoOptStrategy { kFirstImprovement, kBestImprovement };

struct TwoOptParams {
  TwoOptStrategy strategy = TwoOptStrategy::kFirstImprovement;
  // std::nullopt means run until no improving move remains.
  std::optional<std::int64_t> max_passes;

  // Throws ConfigError naming the field.
  void Validate() const;
};

// A move must shorten the tour by more than this to be accepted.
inline constexpr double kTwoOptMinGain = 1e-10;

// 2-opt local search. A move (i, k) with 1 <= i < k <= n-1 keeps
// route[0..i-1], reverses route[i..k] and keeps route[k+1..]. First
// improvement restarts the scan after every accepted move; best improvement
// applies the single best move of each full scan. `iterations` counts scans.
SolveResult TwoOpt(const DistanceTable& table, const Tour& initial,
                   const TwoOptParams& params = {});
SolveResult TwoOpt(const Instance& inst, const Tour& initial,
                   const TwoOptParams& params = {});

// Optional local search applied to every offspring after mutation.
enum class GaLocalSearch { kNone, kTwoOpt };

struct GaParams {
  int population_size = 100;
  int elite_count = 2;
  int tournament_size = 5;
  double crossover_rate = 0.9;
  double mutation_rate = 0.15;
  int max_generations = 2000;
  int stagnation_limit = 150;
  GaLocalSearch local_search = GaLocalSearch::kTwoOpt;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

// Called after each generation with the generation number (1-based) and the
// best length observed so far.
using GaObserver = std::function<void(std::int64_t, double)>;

// Generational genetic algorithm over permutations. Fitness is tour length
// (lower is fitter). Each generation keeps `elite_count` best individuals and
// breeds the rest by tournament selection, order crossover and
// segment-reversal mutation. Stops once the best length has not improved by
// more than 1e-9 relative for `stagnation_limit` generations, or at
// `max_generations`. Returns the best individual ever seen. Requires n >= 3.
SolveResult Genetic(const DistanceTable& table, const GaParams& params,
                    Seed seed, const GaObserver& observer = {});
SolveResult Genetic(const Instance& inst, const GaParams& params, Seed seed);

namespace ga {

// Order crossover (OX). The child takes parent_a[lo..hi] in place and fills
// the other positions, starting after hi and wrapping, with the remaining
// cities in the order they appear in parent_b starting after hi.
std::vector<int> OrderCrossover(std::span<const int> parent_a,
                                std::span<const int> parent_b, std::size_t lo,
                                std::size_t hi);

}  // namespace ga

// Largest instance ExactTour accepts.
inline constexpr std::size_t kExactMaxCities = 12;

// Exhaustive search over all (n-1)!/2 tours with city 0 first and
// order[1] < order[n-1]. Ties go to the lexicographically smallest order.
// Throws RefusalError for n > kExactMaxCities, DomainError for n < 3.
SolveResult ExactTour(const DistanceTable& table);
SolveResult ExactTour(const Instance& inst);

}  // namespace tspkit

#endif  // TSPKIT_SOLVERS_H_

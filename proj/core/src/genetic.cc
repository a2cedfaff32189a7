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
#include "tspkit/error.h"
#include "tspkit/solvers.h"
#include "two_opt_internal.h"

namespace tspkit {

void GaParams::Validate() const {
  if (population_size < 1) {
    throw ConfigError("population_size",
                      fmt::format("must be >= 1, got {}", population_size));
  }
  if (elite_count < 0 || elite_count >= population_size) {
    throw ConfigError("elite_count",
                      fmt::format("must be in [0, population_size), got {}",
                                  elite_count));
  }
  if (tournament_size < 1 || tournament_size > population_size) {
    throw ConfigError("tournament_size",
                      fmt::format("must be in [1, population_size], got {}",
                                  tournament_size));
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw ConfigError("crossover_rate",
                      fmt::format("must be in [0, 1], got {}", crossover_rate));
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ConfigError("mutation_rate",
                      fmt::format("must be in [0, 1], got {}", mutation_rate));
  }
  if (max_generations < 1) {
    throw ConfigError("max_generations",
                      fmt::format("must be >= 1, got {}", max_generations));
  }
  if (stagnation_limit < 1 || stagnation_limit > max_generations) {
    throw ConfigError("stagnation_limit",
                      fmt::format("must be in [1, max_generations], got {}",
                                  stagnation_limit));
  }
}

namespace ga {

std::vector<int> OrderCrossover(std::span<const int> parent_a,
                                std::span<const int> parent_b, std::size_t lo,
                                std::size_t hi) {
  const std::size_t n = parent_a.size();
  std::vector<int> child(n, -1);
  std::vector<bool> taken(n, false);
  for (std::size_t i = lo; i <= hi; ++i) {
    child[i] = parent_a[i];
    taken[parent_a[i]] = true;
  }
  std::size_t write = (hi + 1) % n;
  for (std::size_t step = 0; step < n; ++step) {
    const int city = parent_b[(hi + 1 + step) % n];
    if (taken[city]) continue;
    child[write] = city;
    write = (write + 1) % n;
  }
  return child;
}

}  // namespace ga

namespace {

struct Individual {
  std::vector<int> order;
  double length = 0.0;
};

// Index of the fittest of `size` individuals drawn with replacement.
std::size_t Tournament(const std::vector<Individual>& population, int size,
                       Rng& rng) {
  std::size_t best = rng.Below(population.size());
  for (int i = 1; i < size; ++i) {
    const std::size_t challenger = rng.Below(population.size());
    if (population[challenger].length < population[best].length ||
        (population[challenger].length == population[best].length &&
         challenger < best)) {
      best = challenger;
    }
  }
  return best;
}

// Two distinct positions, lo < hi.
std::pair<std::size_t, std::size_t> DistinctCuts(std::size_t n, Rng& rng) {
  std::size_t lo = rng.Below(n);
  std::size_t hi = rng.Below(n - 1);
  if (hi >= lo) ++hi;
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace

SolveResult Genetic(const DistanceTable& table, const GaParams& params,
                    Seed seed, const GaObserver& observer) {
  params.Validate();
  const std::size_t n = table.size();
  if (n < 3) throw DomainError(fmt::format("genetic needs n >= 3, got {}", n));
  Stopwatch watch;
  Rng rng(seed);

  const auto pop_size = static_cast<std::size_t>(params.population_size);
  std::vector<Individual> population(pop_size);
  for (Individual& ind : population) {
    ind.order.resize(n);
    std::iota(ind.order.begin(), ind.order.end(), 0);
    rng.Shuffle(std::span<int>(ind.order));
    ind.length = table.Length(ind.order);
  }

  auto fittest = [&]() {
    return std::min_element(population.begin(), population.end(),
                            [](const Individual& a, const Individual& b) {
                              return a.length < b.length;
                            });
  };
  Individual best = *fittest();

  std::vector<std::size_t> ranking(pop_size);
  std::vector<Individual> next(pop_size);
  std::int64_t generation = 0;
  int stalled = 0;
  while (generation < params.max_generations) {
    ++generation;

    std::iota(ranking.begin(), ranking.end(), 0);
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&](std::size_t a, std::size_t b) {
                       return population[a].length < population[b].length;
                     });
    for (int e = 0; e < params.elite_count; ++e) next[e] = population[ranking[e]];

    for (std::size_t slot = params.elite_count; slot < pop_size; ++slot) {
      const std::size_t a = Tournament(population, params.tournament_size, rng);
      const std::size_t b = Tournament(population, params.tournament_size, rng);
      Individual& child = next[slot];
      if (rng.Chance(params.crossover_rate)) {
        const auto [lo, hi] = DistinctCuts(n, rng);
        child.order = ga::OrderCrossover(population[a].order,
                                         population[b].order, lo, hi);
      } else {
        const bool a_fitter = population[a].length < population[b].length ||
                              (population[a].length == population[b].length &&
                               a <= b);
        child.order = population[a_fitter ? a : b].order;
      }
      if (rng.Chance(params.mutation_rate)) {
        const auto [lo, hi] = DistinctCuts(n, rng);
        std::reverse(child.order.begin() + lo, child.order.begin() + hi + 1);
      }
      if (params.local_search == GaLocalSearch::kTwoOpt) {
        internal::ImproveTwoOpt(table, child.order, {});
      }
      child.length = table.Length(child.order);
    }
    population.swap(next);

    const auto champion = fittest();
    if (champion->length < best.length * (1.0 - 1e-9)) {
      stalled = 0;
    } else {
      ++stalled;
    }
    if (champion->length < best.length) best = *champion;
    if (observer) observer(generation, best.length);
    if (stalled >= params.stagnation_limit) break;
  }

  SolveResult result;
  result.algorithm = "genetic";
  result.seed = seed;
  result.tour.order = std::move(best.order);
  result.length = best.length;
  result.iterations = generation;
  result.wall_time_s = watch.Seconds();
  return result;
}

SolveResult Genetic(const Instance& inst, const GaParams& params, Seed seed) {
  return Genetic(DistanceTable(inst), params, seed);
}

}  // namespace tspkit

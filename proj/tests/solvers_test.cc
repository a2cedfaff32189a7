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
#include <cmath>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tspkit/counting.h"
#include "tspkit/error.h"
#include "tspkit/solvers.h"

namespace tspkit {
namespace {

using testing::NearRel;
using testing::OracleOptimum;
using testing::RandomInstance;
using testing::UnitSquare;

void ExpectConsistent(const Instance& inst, const SolveResult& r) {
  ASSERT_EQ(ValidateTour(inst, r.tour), std::nullopt) << r.algorithm;
  EXPECT_TRUE(NearRel(r.length, TourLength(inst, r.tour))) << r.algorithm;
  EXPECT_GE(r.wall_time_s, 0.0);
}

// Smallest 2-opt delta over all (i, k), computed from coordinates.
double MinTwoOptDelta(const Instance& inst, const std::vector<int>& t) {
  const std::size_t n = t.size();
  auto d = [&](int a, int b) { return Distance(inst[a], inst[b]); };
  double min_delta = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double delta = d(t[i - 1], t[k]) + d(t[i], t[(k + 1) % n]) -
                           d(t[i - 1], t[i]) - d(t[k], t[(k + 1) % n]);
      min_delta = std::min(min_delta, delta);
    }
  }
  return min_delta;
}

// --- random_tour ---

TEST(RandomTourTest, DeterministicAndValid) {
  const Instance inst = RandomInstance(5, 1);
  const SolveResult a = RandomTour(inst, 42);
  const SolveResult b = RandomTour(inst, 42);
  EXPECT_EQ(a.tour, b.tour);
  ExpectConsistent(inst, a);
  EXPECT_EQ(a.seed, Seed{42});
  EXPECT_EQ(a.iterations, 0);
  for (Seed s = 0; s < 50; ++s) ExpectConsistent(inst, RandomTour(inst, s));
}

TEST(RandomTourTest, MeanOnUnitSquareIsAtLeastGreedy) {
  const Instance square = UnitSquare();
  double total = 0.0;
  for (Seed s = 0; s < 1000; ++s) total += RandomTour(square, s).length;
  EXPECT_GE(total / 1000.0, GreedyTour(square).length);
}

TEST(RandomTourTest, IsUniformOverSmallPermutations) {
  // All 24 orders of 4 cities should appear about equally often.
  const Instance square = UnitSquare();
  std::map<std::vector<int>, int> counts;
  const int draws = 24000;
  for (Seed s = 0; s < draws; ++s) ++counts[RandomTour(square, s).tour.order];
  ASSERT_EQ(counts.size(), 24u);
  for (const auto& [order, count] : counts) {
    EXPECT_NEAR(count, 1000, 150);
  }
}

TEST(RandomTourTest, RequiresTwoCities) {
  const Instance pair("pair", {Point{0, 0}, Point{1, 0}});
  EXPECT_NO_THROW(RandomTour(pair, 1));
}

// --- greedy ---

TEST(GreedyTest, Examples) {
  EXPECT_DOUBLE_EQ(GreedyTour(UnitSquare()).length, 4.0);
  const Instance line("line", {Point{0, 0}, Point{1, 0}, Point{2, 0}});
  const SolveResult r = GreedyTour(line);
  EXPECT_DOUBLE_EQ(r.length, 4.0);
  EXPECT_EQ(r.tour.order, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(r.iterations, 0);
  EXPECT_FALSE(r.seed.has_value());
}

TEST(GreedyTest, StartsAtZeroTowardsLowerNeighbour) {
  const SolveResult r = GreedyTour(UnitSquare());
  EXPECT_EQ(r.tour.order, (std::vector<int>{0, 1, 2, 3}));
}

TEST(GreedyTest, TooSmall) {
  const Instance pair("pair", {Point{0, 0}, Point{1, 0}});
  EXPECT_THROW(GreedyTour(pair), DomainError);
}

TEST(GreedyTest, NeverBeatsOptimum) {
  for (Seed s = 0; s < 50; ++s) {
    const Instance inst = RandomInstance(8, 100 + s);
    const double optimum = OracleOptimum(inst);
    const SolveResult r = GreedyTour(inst);
    ExpectConsistent(inst, r);
    EXPECT_GE(r.length, optimum * (1 - 1e-9)) << "seed " << s;
  }
}

TEST(GreedyTest, FeasibilityTrace) {
  for (Seed s = 0; s < 30; ++s) {
    const Instance inst = RandomInstance(3 + static_cast<std::int64_t>(s) * 2, 7 * s);
    const std::size_t n = inst.size();
    std::vector<int> degree(n, 0);
    std::vector<int> component(n);
    std::iota(component.begin(), component.end(), 0);
    std::vector<double> weights;
    std::size_t last_count = 0;
    bool closed = false;
    GreedyTour(DistanceTable(inst), [&](const GreedyEdge& e, std::size_t count) {
      EXPECT_EQ(count, last_count + 1);
      last_count = count;
      EXPECT_LT(degree[e.u], 2);
      EXPECT_LT(degree[e.v], 2);
      ++degree[e.u];
      ++degree[e.v];
      const int cu = component[e.u];
      const int cv = component[e.v];
      if (cu == cv) {
        EXPECT_EQ(count, n) << "cycle closed early";
        closed = true;
      } else {
        for (int& c : component) {
          if (c == cv) c = cu;
        }
      }
      if (count < n) weights.push_back(e.weight);
    });
    EXPECT_EQ(last_count, n);
    EXPECT_TRUE(closed);
    EXPECT_TRUE(std::is_sorted(weights.begin(), weights.end()));
    for (int deg : degree) EXPECT_EQ(deg, 2);
  }
}

TEST(GreedyTest, TieBreakIsByEndpointIndex) {
  // A regular hexagon: all six sides tie. Ties resolve by (min, max) index
  // so the result is the hexagon perimeter in index order.
  std::vector<Point> points;
  for (int i = 0; i < 6; ++i) {
    points.push_back(Point{std::cos(i * M_PI / 3), std::sin(i * M_PI / 3)});
  }
  const Instance hexagon("hexagon", points);
  const SolveResult r = GreedyTour(hexagon);
  EXPECT_NEAR(r.length, 6.0, 1e-12);
  EXPECT_EQ(r.tour.order, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

// --- two_opt ---

TEST(TwoOptTest, UncrossesSquare) {
  const SolveResult r = TwoOpt(UnitSquare(), Tour{{0, 2, 1, 3}});
  EXPECT_DOUBLE_EQ(r.length, 4.0);
  EXPECT_EQ(r.iterations, 2);  // one accepting scan, one confirming scan
  for (TwoOptStrategy strategy :
       {TwoOptStrategy::kFirstImprovement, TwoOptStrategy::kBestImprovement}) {
    EXPECT_DOUBLE_EQ(TwoOpt(UnitSquare(), Tour{{0, 2, 1, 3}}, {.strategy = strategy}).length,
                     4.0);
  }
}

TEST(TwoOptTest, FixpointCountsOnePass) {
  const SolveResult r = TwoOpt(UnitSquare(), Tour{{0, 1, 2, 3}});
  EXPECT_EQ(r.tour.order, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(r.iterations, 1);
}

TEST(TwoOptTest, TriangleIsUnchanged) {
  const Instance tri("tri", {Point{0, 0}, Point{3, 0}, Point{0, 4}});
  const SolveResult r = TwoOpt(tri, Tour{{2, 0, 1}});
  EXPECT_EQ(r.tour.order, (std::vector<int>{2, 0, 1}));
  EXPECT_DOUBLE_EQ(r.length, 12.0);
}

TEST(TwoOptTest, RejectsInvalidInitialTour) {
  EXPECT_THROW(TwoOpt(UnitSquare(), Tour{{0, 0, 1, 2}}), ValidationError);
  EXPECT_THROW(TwoOpt(UnitSquare(), Tour{{0, 1, 2, 3}}, {.max_passes = 0}), ConfigError);
}

TEST(TwoOptTest, MaxPassesBoundsWork) {
  const Instance inst = RandomInstance(60, 9);
  const Tour start = RandomTour(inst, 9).tour;
  const SolveResult one = TwoOpt(inst, start, {.max_passes = 1});
  EXPECT_EQ(one.iterations, 1);
  EXPECT_LT(one.length, TourLength(inst, start));
  const SolveResult full = TwoOpt(inst, start);
  EXPECT_LE(full.length, one.length);
}

TEST(TwoOptTest, BoundedByOptimumAndInitial) {
  for (Seed s = 0; s < 50; ++s) {
    const Instance inst = RandomInstance(8, 200 + s);
    const double optimum = OracleOptimum(inst);
    const SolveResult start = RandomTour(inst, s);
    const SolveResult r = TwoOpt(inst, start.tour);
    ExpectConsistent(inst, r);
    EXPECT_GE(r.length, optimum * (1 - 1e-9));
    EXPECT_LE(r.length, start.length);
  }
}

TEST(TwoOptTest, TwoOptimalityCertificate) {
  for (TwoOptStrategy strategy :
       {TwoOptStrategy::kFirstImprovement, TwoOptStrategy::kBestImprovement}) {
    for (Seed s = 0; s < 10; ++s) {
      const Instance inst = RandomInstance(40, 300 + s);
      const SolveResult r = TwoOpt(inst, RandomTour(inst, s).tour, {.strategy = strategy});
      EXPECT_GE(MinTwoOptDelta(inst, r.tour.order), -1e-9);
    }
  }
}

// --- genetic ---

TEST(GaParamsTest, ValidationNamesField) {
  auto field_of = [](GaParams p) -> std::string {
    try {
      p.Validate();
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "";
  };
  EXPECT_EQ(field_of({}), "");
  EXPECT_EQ(field_of({.population_size = 0}), "population_size");
  EXPECT_EQ(field_of({.population_size = 10, .elite_count = 10}), "elite_count");
  EXPECT_EQ(field_of({.population_size = 10, .tournament_size = 11}), "tournament_size");
  EXPECT_EQ(field_of({.crossover_rate = 1.5}), "crossover_rate");
  EXPECT_EQ(field_of({.mutation_rate = -0.1}), "mutation_rate");
  EXPECT_EQ(field_of({.max_generations = 0}), "max_generations");
  EXPECT_EQ(field_of({.max_generations = 100, .stagnation_limit = 101}), "stagnation_limit");
  EXPECT_THROW(Genetic(UnitSquare(), {.elite_count = 100}, 1), ConfigError);
}

TEST(GeneticTest, SquareReachesOptimum) {
  for (Seed s = 0; s < 5; ++s) {
    EXPECT_DOUBLE_EQ(Genetic(UnitSquare(), {}, s).length, 4.0);
    EXPECT_DOUBLE_EQ(
        Genetic(UnitSquare(), {.local_search = GaLocalSearch::kNone}, s).length, 4.0);
  }
}

TEST(GeneticTest, Deterministic) {
  const Instance inst = RandomInstance(30, 4);
  const GaParams params{.max_generations = 300, .stagnation_limit = 50};
  const SolveResult a = Genetic(inst, params, 77);
  const SolveResult b = Genetic(inst, params, 77);
  EXPECT_EQ(a.tour, b.tour);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.length, b.length);
  ExpectConsistent(inst, a);
}

TEST(GeneticTest, BestEverIsNonIncreasing) {
  const Instance inst = RandomInstance(40, 5);
  for (GaLocalSearch ls : {GaLocalSearch::kNone, GaLocalSearch::kTwoOpt}) {
    std::vector<double> history;
    const SolveResult r =
        Genetic(DistanceTable(inst), {.max_generations = 400, .local_search = ls}, 3,
                [&](std::int64_t gen, double best) {
                  EXPECT_EQ(gen, static_cast<std::int64_t>(history.size()) + 1);
                  history.push_back(best);
                });
    ASSERT_EQ(static_cast<std::int64_t>(history.size()), r.iterations);
    for (std::size_t i = 1; i < history.size(); ++i) EXPECT_LE(history[i], history[i - 1]);
    EXPECT_EQ(history.back(), r.length);
  }
}

TEST(GeneticTest, StopsOnStagnation) {
  const SolveResult r = Genetic(UnitSquare(), {.max_generations = 2000, .stagnation_limit = 20}, 1);
  EXPECT_LE(r.iterations, 21);
}

TEST(GeneticTest, FindsOptimumOnSmallInstances) {
  int hits = 0;
  for (Seed s = 0; s < 50; ++s) {
    const Instance inst = RandomInstance(8, 400 + s);
    const double optimum = OracleOptimum(inst);
    const SolveResult r = Genetic(inst, {}, s);
    ExpectConsistent(inst, r);
    EXPECT_GE(r.length, optimum * (1 - 1e-9));
    if (NearRel(r.length, optimum)) ++hits;
  }
  EXPECT_GE(hits, 45);
}

TEST(GeneticTest, WithoutLocalSearchStillFindsSmallOptima) {
  int hits = 0;
  for (Seed s = 0; s < 50; ++s) {
    const Instance inst = RandomInstance(8, 400 + s);
    if (NearRel(Genetic(inst, {.local_search = GaLocalSearch::kNone}, s).length,
                OracleOptimum(inst))) {
      ++hits;
    }
  }
  EXPECT_GE(hits, 45);
}

TEST(OrderCrossoverTest, KeepsSegmentAndFillsInParentOrder) {
  const std::vector<int> a{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const std::vector<int> b{8, 2, 6, 7, 1, 5, 4, 0, 3};
  // Segment a[3..5] = {3,4,5}; fill from b after position 5: 4,0,3,8,2,6,7,1,5
  // minus {3,4,5} gives 0,8,2,6,7,1 written at positions 6,7,8,0,1,2.
  EXPECT_EQ(ga::OrderCrossover(a, b, 3, 5), (std::vector<int>{6, 7, 1, 3, 4, 5, 0, 8, 2}));
}

TEST(OrderCrossoverTest, AlwaysPermutation) {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.Below(40);
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 0);
    std::vector<int> b = a;
    rng.Shuffle(std::span<int>(a));
    rng.Shuffle(std::span<int>(b));
    std::size_t lo = rng.Below(n);
    std::size_t hi = rng.Below(n);
    if (lo > hi) std::swap(lo, hi);
    const std::vector<int> child = ga::OrderCrossover(a, b, lo, hi);
    EXPECT_EQ(ValidateTour(n, Tour{child}), std::nullopt);
    for (std::size_t i = lo; i <= hi; ++i) EXPECT_EQ(child[i], a[i]);
  }
}

// --- exact ---

TEST(ExactTest, Examples) {
  EXPECT_DOUBLE_EQ(ExactTour(UnitSquare()).length, 4.0);
  const Instance tri("tri", {Point{0, 0}, Point{3, 0}, Point{0, 4}});
  const SolveResult r = ExactTour(tri);
  EXPECT_DOUBLE_EQ(r.length, 12.0);
  EXPECT_EQ(r.tour.order, (std::vector<int>{0, 1, 2}));
}

TEST(ExactTest, CanonicalTieBreak) {
  // Square: [0,1,2,3] and [0,3,2,1] tie; only the canonical direction with
  // order[1] < order[n-1] is enumerated.
  EXPECT_EQ(ExactTour(UnitSquare()).tour.order, (std::vector<int>{0, 1, 2, 3}));
}

TEST(ExactTest, Limits) {
  const Instance pair("pair", {Point{0, 0}, Point{1, 0}});
  EXPECT_THROW(ExactTour(pair), DomainError);
  try {
    ExactTour(RandomInstance(13, 1));
    FAIL() << "expected RefusalError";
  } catch (const RefusalError& e) {
    EXPECT_NE(std::string(e.what()).find("239500800"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("479001600"), std::string::npos) << e.what();
  }
}

TEST(ExactTest, MatchesIndependentOracle) {
  for (Seed s = 0; s < 40; ++s) {
    const auto n = static_cast<std::int64_t>(3 + s % 7);
    const Instance inst = RandomInstance(n, 500 + s);
    const SolveResult r = ExactTour(inst);
    ExpectConsistent(inst, r);
    EXPECT_TRUE(NearRel(r.length, OracleOptimum(inst))) << "n=" << n;
  }
}

TEST(ExactTest, OracleVisitsEveryDirectedTour) {
  // Sanity of the test oracle itself: (n-1)! leaves = 2 * count_tours.
  for (int n = 3; n <= 8; ++n) {
    testing::BruteForceOracle oracle(RandomInstance(n, n));
    oracle.Optimum();
    EXPECT_EQ(BigInt(oracle.leaves()), CountTours(n) * 2);
  }
}

TEST(ExactTest, DominatesHeuristicsAtNineCities) {
  const Instance inst = RandomInstance(9, 9);
  const double exact = ExactTour(inst).length;
  EXPECT_LE(exact, GreedyTour(inst).length * (1 + 1e-9));
  EXPECT_LE(exact, TwoOpt(inst, RandomTour(inst, 1).tour).length * (1 + 1e-9));
  EXPECT_LE(exact, Genetic(inst, {}, 1).length * (1 + 1e-9));
}

// --- shared properties ---

TEST(SolverProperties, EveryResultIsValid) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::int64_t>(3 + rng.Below(62));
    const Instance inst = RandomInstance(n, rng.Next());
    const Seed seed = rng.Next();
    ExpectConsistent(inst, RandomTour(inst, seed));
    ExpectConsistent(inst, GreedyTour(inst));
    ExpectConsistent(inst, TwoOpt(inst, RandomTour(inst, seed).tour));
    ExpectConsistent(inst, Genetic(inst, {.population_size = 20, .max_generations = 30,
                                          .stagnation_limit = 10},
                                   seed));
    if (n <= 8) ExpectConsistent(inst, ExactTour(inst));
  }
}

}  // namespace
}  // namespace tspkit

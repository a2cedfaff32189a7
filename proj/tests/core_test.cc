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
#include <limits>
#include <numeric>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tspkit/counting.h"
#include "tspkit/error.h"
#include "tspkit/random.h"
#include "tspkit/tour.h"

namespace tspkit {
namespace {

using testing::NearRel;
using testing::UnitSquare;

TEST(DistanceTest, Examples) {
  EXPECT_DOUBLE_EQ(Distance(Point{0, 0}, Point{3, 4}), 5.0);
  EXPECT_EQ(Distance(Point{1, 2, 3}, Point{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(Distance(Point{0, 0}, Point{1, 1}), 1.4142135623730951);
}

TEST(DistanceTest, DimensionMismatchNamesBothDimensions) {
  try {
    Distance(Point{0, 0}, Point{0, 0, 0});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("2 vs 3"), std::string::npos) << e.what();
  }
}

TEST(PointTest, RejectsNonFiniteAndEmpty) {
  EXPECT_THROW(Point({}), ValidationError);
  EXPECT_THROW((Point{0.0, std::numeric_limits<double>::quiet_NaN()}), ValidationError);
  EXPECT_THROW((Point{std::numeric_limits<double>::infinity()}), ValidationError);
}

TEST(InstanceTest, Invariants) {
  EXPECT_THROW(Instance("one", {Point{0, 0}}), ValidationError);
  EXPECT_THROW(Instance("", {Point{0, 0}, Point{1, 1}}), ValidationError);
  EXPECT_THROW(Instance("mixed", {Point{0, 0}, Point{1, 1, 1}}), ValidationError);
  const Instance inst("ok", {Point{0, 0}, Point{1, 1}});
  EXPECT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.dimension(), 2u);
}

TEST(TourLengthTest, Examples) {
  const Instance square = UnitSquare();
  EXPECT_DOUBLE_EQ(TourLength(square, Tour{{0, 1, 2, 3}}), 4.0);
  EXPECT_NEAR(TourLength(square, Tour{{0, 2, 1, 3}}), 2.0 + 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(TourLength(square, Tour{{0, 2, 1, 3}}), 4.82842712, 1e-8);
  const Instance pair("pair", {Point{0, 0}, Point{5, 0}});
  EXPECT_DOUBLE_EQ(TourLength(pair, Tour{{0, 1}}), 10.0);
}

TEST(TourLengthTest, RejectsInvalidTour) {
  const Instance square = UnitSquare();
  EXPECT_THROW(TourLength(square, Tour{{0, 1, 1, 3}}), ValidationError);
  EXPECT_THROW(TourLength(square, Tour{{0, 1, 2}}), ValidationError);
  EXPECT_THROW(TourLength(square, Tour{{0, 1, 2, 4}}), ValidationError);
}

TEST(TourLengthTest, TableAgreesWithDirectEvaluation) {
  const Instance inst = testing::RandomInstance(57, 3);
  const DistanceTable full(inst);
  const DistanceTable lazy(inst, /*matrix_cap=*/10);
  ASSERT_TRUE(full.precomputed());
  ASSERT_FALSE(lazy.precomputed());
  Tour tour;
  tour.order.resize(inst.size());
  std::iota(tour.order.begin(), tour.order.end(), 0);
  Rng(5).Shuffle(std::span<int>(tour.order));
  const double direct = TourLength(inst, tour);
  EXPECT_EQ(TourLength(full, tour), direct);
  EXPECT_EQ(TourLength(lazy, tour), direct);
  EXPECT_TRUE(NearRel(direct, testing::NaiveLength(inst, tour.order)));
}

TEST(ValidateTourTest, Examples) {
  EXPECT_EQ(ValidateTour(4, Tour{{0, 1, 2, 3}}), std::nullopt);

  const auto dup = ValidateTour(4, Tour{{0, 1, 1, 3}});
  ASSERT_TRUE(dup.has_value());
  EXPECT_NE(dup->find("duplicate index 1"), std::string::npos) << *dup;

  const auto short_tour = ValidateTour(4, Tour{{0, 1, 2}});
  ASSERT_TRUE(short_tour.has_value());
  EXPECT_NE(short_tour->find("length mismatch"), std::string::npos) << *short_tour;
  EXPECT_NE(short_tour->find("3"), std::string::npos);
  EXPECT_NE(short_tour->find("4"), std::string::npos);

  const auto range = ValidateTour(4, Tour{{0, 1, -1, 3}});
  ASSERT_TRUE(range.has_value());
  EXPECT_NE(range->find("out of range"), std::string::npos) << *range;
}

TEST(ValidateTourTest, ReportsFirstViolation) {
  // Out-of-range at position 1 comes before the duplicate at position 3.
  const auto v = ValidateTour(4, Tour{{0, 7, 2, 2}});
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("out of range"), std::string::npos) << *v;
}

TEST(CountingTest, Tours) {
  EXPECT_EQ(CountTours(3), 1);
  EXPECT_EQ(CountTours(4), 3);
  EXPECT_EQ(CountTours(10), 181440);
  EXPECT_EQ(CountTours(13).str(), "239500800");
  // Beyond 64-bit: 29!/2.
  EXPECT_EQ(CountTours(30).str(), "4420880996869850977271808000000");
  EXPECT_THROW(CountTours(2), DomainError);
}

TEST(CountingTest, ToursTimesTwoNEqualsNFactorial) {
  BigInt factorial = 1;
  for (int n = 1; n <= 12; ++n) {
    factorial *= n;
    if (n >= 3) EXPECT_EQ(CountTours(n) * 2 * n, factorial) << "n=" << n;
  }
}

TEST(CountingTest, Edges) {
  EXPECT_EQ(CountEdges(2), 1u);
  EXPECT_EQ(CountEdges(4), 6u);
  EXPECT_EQ(CountEdges(200), 19900u);
  EXPECT_THROW(CountEdges(1), DomainError);
}

TEST(RngTest, BelowIsInRangeAndDeterministic) {
  Rng a(11);
  Rng b(11);
  for (int i = 0; i < 1000; ++i) {
    const auto bound = static_cast<std::uint64_t>(i % 17 + 1);
    const auto x = a.Below(bound);
    EXPECT_LT(x, bound);
    EXPECT_EQ(x, b.Below(bound));
  }
  Rng c(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.Unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngTest, MersenneTwisterReferenceValue) {
  // 10000th output of mt19937_64 default-seeded, fixed by the C++ standard.
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.Next();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

// Properties over random points and tours.
class CoreProperties : public ::testing::TestWithParam<int> {};

TEST_P(CoreProperties, DistanceSymmetryAndTriangleInequality) {
  Rng rng(GetParam());
  const std::size_t d = 1 + rng.Below(4);
  auto random_point = [&] {
    std::vector<double> coords(d);
    for (double& c : coords) c = (rng.Unit() - 0.5) * 1e4;
    return Point(std::move(coords));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Point a = random_point();
    const Point b = random_point();
    const Point c = random_point();
    EXPECT_EQ(Distance(a, b), Distance(b, a));
    EXPECT_LE(Distance(a, c), Distance(a, b) + Distance(b, c) + 1e-9);
    EXPECT_EQ(Distance(a, a), 0.0);
  }
}

TEST_P(CoreProperties, TourLengthRotationAndReversalInvariance) {
  Rng rng(1000 + GetParam());
  const auto n = static_cast<std::int64_t>(3 + rng.Below(60));
  const Instance inst = testing::RandomInstance(n, rng.Next());
  Tour tour;
  tour.order.resize(inst.size());
  std::iota(tour.order.begin(), tour.order.end(), 0);
  rng.Shuffle(std::span<int>(tour.order));
  const double base = TourLength(inst, tour);

  Tour rotated = tour;
  std::rotate(rotated.order.begin(), rotated.order.begin() + rng.Below(inst.size()),
              rotated.order.end());
  EXPECT_TRUE(NearRel(TourLength(inst, rotated), base));

  Tour reversed = tour;
  std::reverse(reversed.order.begin(), reversed.order.end());
  EXPECT_TRUE(NearRel(TourLength(inst, reversed), base));
}

INSTANTIATE_TEST_SUITE_P(Seeds, CoreProperties, ::testing::Range(0, 20));

}  // namespace
}  // namespace tspkit

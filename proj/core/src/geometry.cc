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

#include "tspkit/geometry.h"

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "tspkit/error.h"

namespace tspkit {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ValidationError("point must have dimension >= 1");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i])) {
      throw ValidationError(
          fmt::format("coordinate {} is not finite ({})", i, coords_[i]));
    }
  }
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

double Distance(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError(fmt::format("dimension mismatch: {} vs {}",
                                      a.dimension(), b.dimension()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

Instance::Instance(std::string name, std::vector<Point> points)
    : name_(std::move(name)), points_(std::move(points)) {
  if (name_.empty()) throw ValidationError("instance name must be non-empty");
  if (points_.size() < 2) {
    throw ValidationError(
        fmt::format("instance needs at least 2 points, got {}", points_.size()));
  }
  const std::size_t d = points_.front().dimension();
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].dimension() != d) {
      throw ValidationError(fmt::format(
          "point {} has dimension {}, expected {}", i, points_[i].dimension(), d));
    }
  }
}

double Instance::Dist(std::size_t i, std::size_t j) const {
  const Point& a = points_[i];
  const Point& b = points_[j];
  double sum = 0.0;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace tspkit

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

#ifndef TSPKIT_GEOMETRY_H_
#define TSPKIT_GEOMETRY_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tspkit {

// A city in d-dimensional Euclidean space. Coordinates are finite and
// d >= 1; both are checked on construction.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dimension() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Euclidean distance. Throws ValidationError when the dimensions differ.
double Distance(const Point& a, const Point& b);

// A named, immutable list of cities sharing one dimension, n >= 2.
class Instance {
 public:
  Instance(std::string name, std::vector<Point> points);

  const std::string& name() const { return name_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.front().dimension(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  // Distance between cities i and j. Unchecked indices.
  double Dist(std::size_t i, std::size_t j) const;

 private:
  std::string name_;
  std::vector<Point> points_;
};

}  // namespace tspkit

#endif  // TSPKIT_GEOMETRY_H_

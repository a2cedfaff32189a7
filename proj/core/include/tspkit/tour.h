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

#ifndef TSPKIT_TOUR_H_
#define TSPKIT_TOUR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspkit/geometry.h"

namespace tspkit {

// A closed tour: a permutation of 0..n-1. The edge from the last city back to
// the first is implicit.
struct Tour {
  std::vector<int> order;

  std::size_t size() const { return order.size(); }
  friend bool operator==(const Tour&, const Tour&) = default;
};

// Returns std::nullopt if `tour` is a permutation of 0..n-1, otherwise a
// description of the first violation found (length, range, duplicate).
std::optional<std::string> ValidateTour(std::size_t n, const Tour& tour);
std::optional<std::string> ValidateTour(const Instance& inst, const Tour& tour);

// Pairwise distances for one instance. Up to `matrix_cap` cities the full
// matrix is precomputed; above it distances are evaluated on demand. The
// instance must outlive the table.
class DistanceTable {
 public:
  static constexpr std::size_t kDefaultMatrixCap = 2048;

  explicit DistanceTable(const Instance& inst,
                         std::size_t matrix_cap = kDefaultMatrixCap);

  const Instance& instance() const { return *inst_; }
  std::size_t size() const { return n_; }
  bool precomputed() const { return !matrix_.empty(); }

  double operator()(std::size_t i, std::size_t j) const {
    return matrix_.empty() ? inst_->Dist(i, j) : matrix_[i * n_ + j];
  }

  // Closed-tour length of `order`. No validation.
  double Length(std::span<const int> order) const;

 private:
  const Instance* inst_;
  std::size_t n_;
  std::vector<double> matrix_;
};

// Closed-tour length: n-1 consecutive edges plus the closing edge.
// Throws ValidationError if `tour` is not a permutation of the instance.
double TourLength(const Instance& inst, const Tour& tour);
double TourLength(const DistanceTable& table, const Tour& tour);

}  // namespace tspkit

#endif  // TSPKIT_TOUR_H_

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

#include "tspkit/tour.h"

#include <fmt/format.h>

#include "tspkit/error.h"

namespace tspkit {

std::optional<std::string> ValidateTour(std::size_t n, const Tour& tour) {
  if (tour.size() != n) {
    return fmt::format("length mismatch: tour has {} entries, instance has {}",
                       tour.size(), n);
  }
  std::vector<bool> seen(n, false);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const int city = tour.order[pos];
    if (city < 0 || static_cast<std::size_t>(city) >= n) {
      return fmt::format("index {} at position {} is out of range [0, {})",
                         city, pos, n);
    }
    if (seen[city]) {
      return fmt::format("duplicate index {} at position {}", city, pos);
    }
    seen[city] = true;
  }
  return std::nullopt;
}

std::optional<std::string> ValidateTour(const Instance& inst, const Tour& tour) {
  return ValidateTour(inst.size(), tour);
}

DistanceTable::DistanceTable(const Instance& inst, std::size_t matrix_cap)
    : inst_(&inst), n_(inst.size()) {
  if (n_ > matrix_cap) return;
  matrix_.assign(n_ * n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = inst.Dist(i, j);
      matrix_[i * n_ + j] = d;
      matrix_[j * n_ + i] = d;
    }
  }
}

double DistanceTable::Length(std::span<const int> order) const {
  const std::size_t n = order.size();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) total += (*this)(order[i], order[i + 1]);
  return total + (*this)(order[n - 1], order[0]);
}

double TourLength(const DistanceTable& table, const Tour& tour) {
  if (auto violation = ValidateTour(table.size(), tour)) {
    throw ValidationError("invalid tour: " + *violation);
  }
  return table.Length(tour.order);
}

double TourLength(const Instance& inst, const Tour& tour) {
  if (auto violation = ValidateTour(inst, tour)) {
    throw ValidationError("invalid tour: " + *violation);
  }
  const std::size_t n = tour.size();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    total += inst.Dist(tour.order[i], tour.order[i + 1]);
  }
  return total + inst.Dist(tour.order[n - 1], tour.order[0]);
}

}  // namespace tspkit

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
#include <array>
#include <numeric>
#include <vector>

#include <fmt/format.h>

#include "stopwatch.h"
#include "tspkit/error.h"
#include "tspkit/solvers.h"

namespace tspkit {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

SolveResult GreedyTour(const DistanceTable& table,
                       const GreedyObserver& observer) {
  const std::size_t n = table.size();
  if (n < 3) throw DomainError(fmt::format("greedy needs n >= 3, got {}", n));
  Stopwatch watch;

  std::vector<GreedyEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<int>(u), static_cast<int>(v), table(u, v)});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const GreedyEdge& a, const GreedyEdge& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              if (a.u != b.u) return a.u < b.u;
              return a.v < b.v;
            });

  std::vector<std::array<int, 2>> adjacent(n, {-1, -1});
  std::vector<int> degree(n, 0);
  DisjointSets components(n);
  std::size_t accepted = 0;
  auto accept = [&](const GreedyEdge& e) {
    adjacent[e.u][degree[e.u]++] = e.v;
    adjacent[e.v][degree[e.v]++] = e.u;
    components.Union(e.u, e.v);
    ++accepted;
    if (observer) observer(e, accepted);
  };

  for (const GreedyEdge& e : edges) {
    if (accepted == n - 1) break;
    if (degree[e.u] == 2 || degree[e.v] == 2) continue;
    if (components.Find(e.u) == components.Find(e.v)) continue;
    accept(e);
  }

  // n-1 edges now form one Hamiltonian path. Its closing edge was rejected
  // when scanned (both ends were already connected), so it is added here as
  // the n-th edge.
  std::array<int, 2> ends{-1, -1};
  for (std::size_t v = 0, found = 0; v < n && found < 2; ++v) {
    if (degree[v] < 2) ends[found++] = static_cast<int>(v);
  }
  accept({ends[0], ends[1], table(ends[0], ends[1])});

  SolveResult result;
  result.algorithm = "greedy";
  auto& order = result.tour.order;
  order.reserve(n);
  int prev = 0;
  int cur = std::min(adjacent[0][0], adjacent[0][1]);
  order.push_back(0);
  while (cur != 0) {
    order.push_back(cur);
    const int next = adjacent[cur][0] == prev ? adjacent[cur][1] : adjacent[cur][0];
    prev = cur;
    cur = next;
  }
  result.length = table.Length(order);
  result.wall_time_s = watch.Seconds();
  return result;
}

SolveResult GreedyTour(const Instance& inst) {
  return GreedyTour(DistanceTable(inst));
}

}  // namespace tspkit

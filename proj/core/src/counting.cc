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

#include "tspkit/counting.h"

#include <fmt/format.h>

#include "tspkit/error.h"

namespace tspkit {

BigInt CountTours(std::int64_t n) {
  if (n < 3) {
    throw DomainError(fmt::format("tour count needs n >= 3, got {}", n));
  }
  BigInt factorial = 1;
  for (std::int64_t k = 2; k <= n - 1; ++k) factorial *= k;
  return factorial / 2;
}

std::uint64_t CountEdges(std::int64_t n) {
  if (n < 2) {
    throw DomainError(fmt::format("edge count needs n >= 2, got {}", n));
  }
  const auto u = static_cast<std::uint64_t>(n);
  return u * (u - 1) / 2;
}

}  // namespace tspkit

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

#ifndef TSPKIT_SRC_TWO_OPT_INTERNAL_H_
#define TSPKIT_SRC_TWO_OPT_INTERNAL_H_

#include <cstdint>
#include <vector>

#include "tspkit/solvers.h"

namespace tspkit::internal {

// Runs 2-opt on `order` in place and returns the number of scans performed.
std::int64_t ImproveTwoOpt(const DistanceTable& table, std::vector<int>& order,
                           const TwoOptParams& params);

}  // namespace tspkit::internal

#endif  // TSPKIT_SRC_TWO_OPT_INTERNAL_H_

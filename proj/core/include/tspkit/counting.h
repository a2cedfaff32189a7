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

#ifndef TSPKIT_COUNTING_H_
#define TSPKIT_COUNTING_H_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace tspkit {

using BigInt = boost::multiprecision::cpp_int;

// Number of distinct undirected closed tours on n cities, (n-1)!/2.
// Exact for any n. Throws DomainError for n < 3.
BigInt CountTours(std::int64_t n);

// Number of undirected edges of the complete graph, n(n-1)/2.
// Throws DomainError for n < 2.
std::uint64_t CountEdges(std::int64_t n);

}  // namespace tspkit

#endif  // TSPKIT_COUNTING_H_

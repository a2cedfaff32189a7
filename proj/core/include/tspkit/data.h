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

#ifndef TSPKIT_DATA_H_
#define TSPKIT_DATA_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tspkit/geometry.h"
#include "tspkit/random.h"

namespace tspkit {

// Parses an instance from text. Two formats are auto-detected from the first
// non-blank, non-comment line:
//
//  * Plain point list: one city per line, coordinates separated by
//    whitespace and/or commas. Lines starting with '#' and blank lines are
//    ignored. The dimension is taken from the first data line. The instance
//    is named `name_hint`.
//
//  * TSPLIB subset: `KEY : value` header lines (NAME, DIMENSION and
//    EDGE_WEIGHT_TYPE are required; TYPE and COMMENT are ignored), then
//    NODE_COORD_SECTION with `id x y` lines, ids 1-based and contiguous,
//    ending at an `EOF` line or end of text. Only EUC_2D is accepted.
//
// Throws ParseError (with line and, for bad tokens, column) on malformed
// text and UnsupportedFormatError for other TSPLIB edge weight types.
Instance ParseInstance(std::string_view text, const std::string& name_hint);

// Plain point-list text. Reals are written with 17 significant digits, so
// ParseInstance(WriteInstance(x), x.name()) reproduces every coordinate.
std::string WriteInstance(const Instance& inst);

// TSPLIB EUC_2D text. Throws ValidationError unless the instance is 2-D.
std::string WriteTsplib(const Instance& inst);

struct GeneratorConfig {
  std::int64_t n = 200;
  double extent = 4000.0;
  Seed seed = 0;

  // Throws ConfigError naming the field.
  void Validate() const;
};

// n points in the plane with both coordinates drawn uniformly from
// [0, extent]. Linear time, deterministic for a fixed seed.
Instance GenerateRandom(const GeneratorConfig& config);
Instance GenerateRandom(const GeneratorConfig& config, const std::string& name);

// Seed used to regenerate the r200 fixture.
inline constexpr Seed kR200Seed = 200;

// Bundled instances: "p15", "att48", "r200". Throws LookupError listing the
// available names for anything else.
Instance Fixture(std::string_view name);
const std::vector<std::string>& FixtureNames();

// Resolves a fixture name or reads and parses a file. File instances are
// named after the file stem. Throws Error if the file cannot be read.
Instance LoadInstance(const std::string& name_or_path);

}  // namespace tspkit

#endif  // TSPKIT_DATA_H_

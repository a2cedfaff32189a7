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

#include <cmath>

#include <fmt/format.h>

#include "tspkit/data.h"
#include "tspkit/error.h"

namespace tspkit {

void GeneratorConfig::Validate() const {
  if (n < 2) throw ConfigError("n", fmt::format("must be >= 2, got {}", n));
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw ConfigError("extent", fmt::format("must be a positive real, got {}", extent));
  }
}

Instance GenerateRandom(const GeneratorConfig& config, const std::string& name) {
  config.Validate();
  Rng rng(config.seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(config.n));
  for (std::int64_t i = 0; i < config.n; ++i) {
    const double x = rng.Unit() * config.extent;
    const double y = rng.Unit() * config.extent;
    points.push_back(Point{x, y});
  }
  return Instance(name, std::move(points));
}

Instance GenerateRandom(const GeneratorConfig& config) {
  return GenerateRandom(config, fmt::format("r{}-seed{}", config.n, config.seed));
}

}  // namespace tspkit

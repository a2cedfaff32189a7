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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "tspkit/data.h"
#include "tspkit/error.h"

namespace tspkit {
namespace internal {
extern const char kP15Text[];
extern const char kAtt48Text[];
}  // namespace internal

const std::vector<std::string>& FixtureNames() {
  static const std::vector<std::string> names = {"p15", "att48", "r200"};
  return names;
}

Instance Fixture(std::string_view name) {
  if (name == "p15") return ParseInstance(internal::kP15Text, "p15");
  if (name == "att48") return ParseInstance(internal::kAtt48Text, "att48");
  if (name == "r200") {
    return GenerateRandom({.n = 200, .extent = 4000.0, .seed = kR200Seed}, "r200");
  }
  throw LookupError(fmt::format("unknown fixture '{}'; available: {}", name,
                                fmt::join(FixtureNames(), ", ")));
}

Instance LoadInstance(const std::string& name_or_path) {
  const std::filesystem::path path(name_or_path);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    for (const std::string& fixture : FixtureNames()) {
      if (fixture == name_or_path) return Fixture(fixture);
    }
    throw Error(fmt::format("cannot read '{}': no such file or fixture", name_or_path));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", name_or_path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str(), path.stem().string());
}

}  // namespace tspkit

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

#ifndef TSPKIT_TOOLS_CLI_H_
#define TSPKIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tspkit::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

// Runs one invocation. `args` excludes the program name. Normal output goes
// to `out`; every error is reported as a single line on `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest round-trip decimal form, always with a fractional part ("4.0").
std::string FormatReal(double value);

}  // namespace tspkit::cli

#endif  // TSPKIT_TOOLS_CLI_H_

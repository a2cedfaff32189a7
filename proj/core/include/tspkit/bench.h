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

#ifndef TSPKIT_BENCH_H_
#define TSPKIT_BENCH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tspkit/geometry.h"
#include "tspkit/random.h"
#include "tspkit/solvers.h"

namespace tspkit {

enum class Algorithm { kRandom, kGreedy, kTwoOpt, kGenetic };

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts "random", "greedy", "two_opt", "genetic". Throws ConfigError.
Algorithm ParseAlgorithm(std::string_view name);

struct BenchConfig {
  std::vector<Algorithm> algorithms;
  // Fixture names or instance file paths.
  std::vector<std::string> instances;
  int trials = 1;
  Seed seed = 0;
  TwoOptParams two_opt;
  GaParams ga;
  int baseline_trials = 32;
  int workers = 1;

  // Throws ConfigError naming the field.
  void Validate() const;
};

// Reads the flat key/value config format:
//
//   # comment
//   algorithms = random, greedy, two_opt, genetic
//   instances = p15, att48, data/my.tsp
//   trials = 3
//   seed = 1
//   baseline_trials = 32
//   workers = 1
//   two_opt.strategy = first | best
//   two_opt.max_passes = 0            # 0 = unbounded
//   ga.population_size = 100          # likewise every GaParams field
//   ga.local_search = two_opt         # or none
//
// Unknown keys and malformed values throw ConfigError.
BenchConfig ParseBenchConfig(std::string_view text);

// Seed for randomized trial t: base ^ t.
inline Seed TrialSeed(Seed base, std::int64_t trial) {
  return base ^ static_cast<Seed>(trial);
}

// Seed for the b-th random tour averaged into the baseline. Lives in its own
// stream so it never collides with a trial seed for realistic trial counts.
inline constexpr Seed kBaselineStream = 0xB5E1'0000'0000'0000ULL;
inline Seed BaselineSeed(Seed base, std::int64_t b) {
  return base ^ (kBaselineStream + static_cast<Seed>(b));
}

struct BenchRecord {
  std::string instance;
  std::int64_t n = 0;
  std::string algorithm;
  std::int64_t trial = 0;
  double length = 0.0;
  double baseline_length = 0.0;
  double ratio = 0.0;
  double wall_time_s = 0.0;
  std::int64_t iterations = 0;
  std::optional<Seed> seed;
  std::string status = "ok";  // "ok" or "failed"
  std::string message;

  bool ok() const { return status == "ok"; }
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// Mean length of `trials` random tours with BaselineSeed(seed, 0..trials-1).
double BaselineLength(const DistanceTable& table, Seed seed, int trials);

// Runs every (instance, algorithm, trial) cell. Greedy is deterministic and
// runs once; the other algorithms run config.trials times. two_opt starts
// from RandomTour(TrialSeed(seed, t)). Only the solver call is timed. Solver
// errors become failed records; an unresolvable instance throws before any
// cell runs. Records are ordered by (instance, algorithm, trial).
std::vector<BenchRecord> RunBenchmark(const BenchConfig& config);
std::vector<BenchRecord> RunBenchmark(const BenchConfig& config,
                                      std::span<const Instance> instances);

struct SummaryRow {
  std::string instance;
  std::int64_t n = 0;
  std::string algorithm;
  std::int64_t runs = 0;
  std::int64_t failures = 0;
  double min_length = 0.0;
  double mean_length = 0.0;
  double max_length = 0.0;
  double mean_ratio = 0.0;
  double mean_wall_time_s = 0.0;
};

// One row per (instance, algorithm), sorted by (n, algorithm, instance).
// Failed records only count towards `failures`. Throws DomainError on empty
// input.
std::vector<SummaryRow> Summarize(std::span<const BenchRecord> records);

enum class EmitFormat { kCsv, kJsonLines, kPlotData };
// Accepts "csv", "json-lines", "plot-data". Throws ConfigError.
EmitFormat ParseEmitFormat(std::string_view name);

struct OutputFile {
  std::string name;
  std::string content;
};

// csv: records.csv and summary.csv. json-lines: records.jsonl and
// summary.jsonl. plot-data: runtime_<algorithm>.tsv and
// ratio_<algorithm>.tsv per algorithm, one `n<TAB>value` row per instance
// (mean over successful trials).
std::vector<OutputFile> Emit(std::span<const BenchRecord> records,
                             std::span<const SummaryRow> summary,
                             EmitFormat format);

inline constexpr std::string_view kRecordsCsvHeader =
    "instance,n,algorithm,trial,length,baseline_length,ratio,wall_time_s,"
    "iterations,seed,status,message";

std::string RecordsToCsv(std::span<const BenchRecord> records);
// Inverse of RecordsToCsv. Throws ParseError with the offending line.
std::vector<BenchRecord> ParseRecordsCsv(std::string_view text);

std::string SummaryToCsv(std::span<const SummaryRow> summary);
// Fixed-width table for terminals.
std::string FormatSummaryTable(std::span<const SummaryRow> summary);

}  // namespace tspkit

#endif  // TSPKIT_BENCH_H_

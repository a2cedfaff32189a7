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
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "tspkit/bench.h"
#include "tspkit/data.h"
#include "tspkit/error.h"

namespace tspkit {

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRandom:
      return "random";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kTwoOpt:
      return "two_opt";
    case Algorithm::kGenetic:
      return "genetic";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kRandom, Algorithm::kGreedy, Algorithm::kTwoOpt,
                      Algorithm::kGenetic}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw ConfigError("algorithm",
                    fmt::format("unknown algorithm '{}' (expected random, greedy, "
                                "two_opt or genetic)",
                                name));
}

void BenchConfig::Validate() const {
  if (algorithms.empty()) throw ConfigError("algorithms", "must not be empty");
  if (instances.empty()) throw ConfigError("instances", "must not be empty");
  if (trials < 1) throw ConfigError("trials", fmt::format("must be >= 1, got {}", trials));
  if (baseline_trials < 1) {
    throw ConfigError("baseline_trials",
                      fmt::format("must be >= 1, got {}", baseline_trials));
  }
  if (workers < 1) throw ConfigError("workers", fmt::format("must be >= 1, got {}", workers));
  two_opt.Validate();
  ga.Validate();
}

namespace {

std::string_view TrimView(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitList(std::string_view value) {
  std::vector<std::string> items;
  while (true) {
    const auto comma = value.find(',');
    const std::string_view item = TrimView(value.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

template <typename T>
T ParseNumber(const std::string& key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, fmt::format("invalid value '{}'", value));
  }
  return out;
}

}  // namespace

BenchConfig ParseBenchConfig(std::string_view text) {
  BenchConfig config;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = TrimView(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", fmt::format("line {}: expected 'key = value'", line_number));
    }
    const std::string key(TrimView(line.substr(0, eq)));
    const std::string_view value = TrimView(line.substr(eq + 1));

    if (key == "algorithms") {
      config.algorithms.clear();
      for (const std::string& name : SplitList(value)) {
        config.algorithms.push_back(ParseAlgorithm(name));
      }
    } else if (key == "instances") {
      config.instances = SplitList(value);
    } else if (key == "trials") {
      config.trials = ParseNumber<int>(key, value);
    } else if (key == "seed") {
      config.seed = ParseNumber<Seed>(key, value);
    } else if (key == "baseline_trials") {
      config.baseline_trials = ParseNumber<int>(key, value);
    } else if (key == "workers") {
      config.workers = ParseNumber<int>(key, value);
    } else if (key == "two_opt.strategy") {
      if (value == "first") {
        config.two_opt.strategy = TwoOptStrategy::kFirstImprovement;
      } else if (value == "best") {
        config.two_opt.strategy = TwoOptStrategy::kBestImprovement;
      } else {
        throw ConfigError(key, fmt::format("expected 'first' or 'best', got '{}'", value));
      }
    } else if (key == "two_opt.max_passes") {
      const auto passes = ParseNumber<std::int64_t>(key, value);
      config.two_opt.max_passes =
          passes == 0 ? std::nullopt : std::optional<std::int64_t>(passes);
    } else if (key == "ga.population_size") {
      config.ga.population_size = ParseNumber<int>(key, value);
    } else if (key == "ga.elite_count") {
      config.ga.elite_count = ParseNumber<int>(key, value);
    } else if (key == "ga.tournament_size") {
      config.ga.tournament_size = ParseNumber<int>(key, value);
    } else if (key == "ga.crossover_rate") {
      config.ga.crossover_rate = ParseNumber<double>(key, value);
    } else if (key == "ga.mutation_rate") {
      config.ga.mutation_rate = ParseNumber<double>(key, value);
    } else if (key == "ga.max_generations") {
      config.ga.max_generations = ParseNumber<int>(key, value);
    } else if (key == "ga.stagnation_limit") {
      config.ga.stagnation_limit = ParseNumber<int>(key, value);
    } else if (key == "ga.local_search") {
      if (value == "none") {
        config.ga.local_search = GaLocalSearch::kNone;
      } else if (value == "two_opt") {
        config.ga.local_search = GaLocalSearch::kTwoOpt;
      } else {
        throw ConfigError(key, fmt::format("expected 'none' or 'two_opt', got '{}'", value));
      }
    } else {
      throw ConfigError(key, fmt::format("line {}: unknown key", line_number));
    }
  }
  config.Validate();
  return config;
}

double BaselineLength(const DistanceTable& table, Seed seed, int trials) {
  double total = 0.0;
  for (int b = 0; b < trials; ++b) total += RandomTour(table, BaselineSeed(seed, b)).length;
  return total / trials;
}

namespace {

struct Cell {
  std::size_t instance;
  Algorithm algorithm;
  std::int64_t trial;
};

BenchRecord RunCell(const BenchConfig& config, const Instance& inst,
                    const DistanceTable& table, double baseline, const Cell& cell) {
  BenchRecord record;
  record.instance = inst.name();
  record.n = static_cast<std::int64_t>(inst.size());
  record.algorithm = std::string(AlgorithmName(cell.algorithm));
  record.trial = cell.trial;
  record.baseline_length = baseline;
  const Seed seed = TrialSeed(config.seed, cell.trial);
  if (cell.algorithm != Algorithm::kGreedy) record.seed = seed;
  try {
    SolveResult result;
    switch (cell.algorithm) {
      case Algorithm::kRandom:
        result = RandomTour(table, seed);
        break;
      case Algorithm::kGreedy:
        result = GreedyTour(table);
        break;
      case Algorithm::kTwoOpt:
        result = TwoOpt(table, RandomTour(table, seed).tour, config.two_opt);
        break;
      case Algorithm::kGenetic:
        result = Genetic(table, config.ga, seed);
        break;
    }
    record.length = result.length;
    record.ratio = result.length / baseline;
    record.wall_time_s = result.wall_time_s;
    record.iterations = result.iterations;
  } catch (const std::exception& e) {
    record.status = "failed";
    record.message = e.what();
  }
  return record;
}

}  // namespace

std::vector<BenchRecord> RunBenchmark(const BenchConfig& config,
                                      std::span<const Instance> instances) {
  BenchConfig checked = config;
  checked.instances.clear();
  for (const Instance& inst : instances) checked.instances.push_back(inst.name());
  checked.Validate();
  std::vector<std::unique_ptr<DistanceTable>> tables;
  std::vector<double> baselines;
  for (const Instance& inst : instances) {
    tables.push_back(std::make_unique<DistanceTable>(inst));
    baselines.push_back(BaselineLength(*tables.back(), config.seed, config.baseline_trials));
  }

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (Algorithm algorithm : config.algorithms) {
      const int trials = algorithm == Algorithm::kGreedy ? 1 : config.trials;
      for (int t = 0; t < trials; ++t) cells.push_back({i, algorithm, t});
    }
  }

  std::vector<BenchRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const Cell& cell = cells[c];
      records[c] = RunCell(config, instances[cell.instance], *tables[cell.instance],
                           baselines[cell.instance], cell);
    }
  };
  const auto workers = std::min<std::size_t>(config.workers, cells.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     return std::tie(a.instance, a.algorithm, a.trial) <
                            std::tie(b.instance, b.algorithm, b.trial);
                   });
  return records;
}

std::vector<BenchRecord> RunBenchmark(const BenchConfig& config) {
  config.Validate();
  std::vector<Instance> instances;
  for (const std::string& name : config.instances) instances.push_back(LoadInstance(name));
  return RunBenchmark(config, instances);
}

std::vector<SummaryRow> Summarize(std::span<const BenchRecord> records) {
  if (records.empty()) throw DomainError("cannot summarize an empty record list");
  struct Accumulator {
    SummaryRow row;
    double length_sum = 0.0;
    double ratio_sum = 0.0;
    double time_sum = 0.0;
  };
  std::map<std::pair<std::string, std::string>, Accumulator> groups;
  for (const BenchRecord& r : records) {
    Accumulator& acc = groups[{r.instance, r.algorithm}];
    SummaryRow& row = acc.row;
    if (row.instance.empty()) {
      row.instance = r.instance;
      row.n = r.n;
      row.algorithm = r.algorithm;
      row.min_length = std::numeric_limits<double>::infinity();
      row.max_length = -std::numeric_limits<double>::infinity();
    }
    if (!r.ok()) {
      ++row.failures;
      continue;
    }
    ++row.runs;
    row.min_length = std::min(row.min_length, r.length);
    row.max_length = std::max(row.max_length, r.length);
    acc.length_sum += r.length;
    acc.ratio_sum += r.ratio;
    acc.time_sum += r.wall_time_s;
  }

  std::vector<SummaryRow> rows;
  for (auto& [key, acc] : groups) {
    SummaryRow row = acc.row;
    if (row.runs > 0) {
      const auto runs = static_cast<double>(row.runs);
      row.mean_length = acc.length_sum / runs;
      row.mean_ratio = acc.ratio_sum / runs;
      row.mean_wall_time_s = acc.time_sum / runs;
    } else {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.min_length = row.max_length = row.mean_length = nan;
      row.mean_ratio = row.mean_wall_time_s = nan;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    return std::tie(a.n, a.algorithm, a.instance) < std::tie(b.n, b.algorithm, b.instance);
  });
  return rows;
}

}  // namespace tspkit

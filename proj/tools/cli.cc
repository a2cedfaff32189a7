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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tspkit/bench.h"
#include "tspkit/data.h"
#include "tspkit/error.h"
#include "tspkit/solvers.h"

namespace tspkit::cli {
namespace {

std::string SingleLine(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (out) out << content;
  if (!out) throw Error(fmt::format("cannot write '{}'", path.string()));
}

Tour ParseTourFile(const std::string& text) {
  Tour tour;
  std::size_t line_number = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view token(line.data() + first, last - first + 1);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_number, first + 1,
                       fmt::format("'{}' is not a city index", token));
    }
    tour.order.push_back(index);
  }
  return tour;
}

std::string FormatTourFile(const Tour& tour) {
  std::string out;
  for (int city : tour.order) out += fmt::format("{}\n", city);
  return out;
}

TwoOptStrategy ParseStrategy(const std::string& name) {
  if (name == "first") return TwoOptStrategy::kFirstImprovement;
  if (name == "best") return TwoOptStrategy::kBestImprovement;
  throw ConfigError("strategy", fmt::format("expected 'first' or 'best', got '{}'", name));
}

void AddGaOptions(CLI::App* cmd, GaParams& ga) {
  cmd->add_option("--population", ga.population_size, "GA population size");
  cmd->add_option("--elite", ga.elite_count, "GA elite count");
  cmd->add_option("--tournament", ga.tournament_size, "GA tournament size");
  cmd->add_option("--crossover-rate", ga.crossover_rate, "GA crossover probability");
  cmd->add_option("--mutation-rate", ga.mutation_rate, "GA mutation probability");
  cmd->add_option("--max-generations", ga.max_generations, "GA generation cap");
  cmd->add_option("--stagnation", ga.stagnation_limit,
                  "GA generations without improvement before stopping");
  cmd->add_option("--local-search", ga.local_search, "GA offspring polish: none | two_opt")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GaLocalSearch>{{"none", GaLocalSearch::kNone},
                                               {"two_opt", GaLocalSearch::kTwoOpt}}));
}

struct GenOptions {
  std::int64_t n = 200;
  double extent = 4000.0;
  Seed seed = 0;
  std::string out;
};

int CmdGen(const GenOptions& opt, std::ostream& out) {
  const GeneratorConfig config{.n = opt.n, .extent = opt.extent, .seed = opt.seed};
  const Instance inst = GenerateRandom(config);
  WriteFile(opt.out, WriteInstance(inst));
  out << fmt::format("n: {}\nextent: {}\nseed: {}\nout: {}\n", opt.n,
                     FormatReal(opt.extent), opt.seed, opt.out);
  return kOk;
}

struct SolveOptions {
  std::string algo;
  std::string in;
  Seed seed = 0;
  std::string init = "greedy";
  std::string strategy = "first";
  std::int64_t max_passes = 0;
  GaParams ga;
  std::string tour_out;
};

int CmdSolve(const SolveOptions& opt, std::ostream& out) {
  const Algorithm algorithm = ParseAlgorithm(opt.algo);
  TwoOptParams two_opt;
  two_opt.strategy = ParseStrategy(opt.strategy);
  if (opt.max_passes != 0) two_opt.max_passes = opt.max_passes;
  if (opt.init != "greedy" && opt.init != "random") {
    throw ConfigError("init", fmt::format("expected 'greedy' or 'random', got '{}'", opt.init));
  }
  two_opt.Validate();
  opt.ga.Validate();

  const Instance inst = LoadInstance(opt.in);
  const DistanceTable table(inst);
  SolveResult result;
  std::optional<double> initial_length;
  switch (algorithm) {
    case Algorithm::kRandom:
      result = RandomTour(table, opt.seed);
      break;
    case Algorithm::kGreedy:
      result = GreedyTour(table);
      break;
    case Algorithm::kTwoOpt: {
      const SolveResult start =
          opt.init == "greedy" ? GreedyTour(table) : RandomTour(table, opt.seed);
      initial_length = start.length;
      result = TwoOpt(table, start.tour, two_opt);
      if (opt.init == "random") result.seed = opt.seed;
      break;
    }
    case Algorithm::kGenetic:
      result = Genetic(table, opt.ga, opt.seed);
      break;
  }

  out << fmt::format("algorithm: {}\ninstance: {}\nn: {}\n", result.algorithm, inst.name(),
                     inst.size());
  if (initial_length) out << fmt::format("initial_length: {}\n", FormatReal(*initial_length));
  out << fmt::format("length: {}\nwall_time_s: {}\niterations: {}\n",
                     FormatReal(result.length), FormatReal(result.wall_time_s),
                     result.iterations);
  if (result.seed) out << fmt::format("seed: {}\n", *result.seed);
  if (!opt.tour_out.empty()) WriteFile(opt.tour_out, FormatTourFile(result.tour));
  return kOk;
}

int CmdExact(const std::string& in, std::ostream& out) {
  const Instance inst = LoadInstance(in);
  const SolveResult result = ExactTour(inst);
  out << fmt::format("instance: {}\nn: {}\nlength: {}\ntour: {}\nwall_time_s: {}\n",
                     inst.name(), inst.size(), FormatReal(result.length),
                     fmt::join(result.tour.order, " "), FormatReal(result.wall_time_s));
  return kOk;
}

int CmdValidate(const std::string& in, const std::string& tour_path, std::ostream& out,
                std::ostream& err) {
  const Instance inst = LoadInstance(in);
  const Tour tour = ParseTourFile(ReadFile(tour_path));
  if (auto violation = ValidateTour(inst, tour)) {
    err << "invalid tour: " << SingleLine(*violation) << '\n';
    return kFailure;
  }
  out << FormatReal(TourLength(inst, tour)) << '\n';
  return kOk;
}

struct BenchOptions {
  std::string config_path;
  std::vector<std::string> algorithms;
  std::vector<std::string> instances;
  std::optional<int> trials;
  std::optional<Seed> seed;
  std::optional<int> baseline_trials;
  std::optional<int> workers;
  std::string out_dir;
  std::string format = "csv";
};

int CmdBench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  if (!opt.config_path.empty()) {
    config = ParseBenchConfig(ReadFile(opt.config_path));
  } else {
    config.algorithms = {Algorithm::kRandom, Algorithm::kGreedy, Algorithm::kTwoOpt,
                         Algorithm::kGenetic};
  }
  if (!opt.algorithms.empty()) {
    config.algorithms.clear();
    for (const std::string& name : opt.algorithms) {
      config.algorithms.push_back(ParseAlgorithm(name));
    }
  }
  if (!opt.instances.empty()) config.instances = opt.instances;
  if (opt.trials) config.trials = *opt.trials;
  if (opt.seed) config.seed = *opt.seed;
  if (opt.baseline_trials) config.baseline_trials = *opt.baseline_trials;
  if (opt.workers) config.workers = *opt.workers;
  config.Validate();
  const EmitFormat format = ParseEmitFormat(opt.format);
  if (format == EmitFormat::kPlotData) {
    throw ConfigError("format", "plot-data is always written; choose csv or json-lines");
  }

  const std::vector<BenchRecord> records = RunBenchmark(config);
  const std::vector<SummaryRow> summary = Summarize(records);

  const std::filesystem::path dir(opt.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(fmt::format("cannot create '{}': {}", opt.out_dir, ec.message()));
  for (EmitFormat f : {format, EmitFormat::kPlotData}) {
    for (const OutputFile& file : Emit(records, summary, f)) {
      WriteFile(dir / file.name, file.content);
    }
  }
  out << FormatSummaryTable(summary);

  const auto succeeded =
      std::count_if(records.begin(), records.end(), [](const BenchRecord& r) { return r.ok(); });
  if (succeeded == 0) {
    err << "error: every benchmark cell failed\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace

std::string FormatReal(double value) {
  std::string text = fmt::format("{}", value);
  if (text.find_first_not_of("-0123456789") == std::string::npos) text += ".0";
  return text;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euclidean TSP toolkit: generate, solve, verify and benchmark tours",
               "tspkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a uniform random instance");
  gen_cmd->add_option("--n", gen.n, "Number of cities")->capture_default_str();
  gen_cmd->add_option("--extent", gen.extent, "Coordinate upper bound")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run one heuristic on an instance");
  solve_cmd->add_option("--algo", solve.algo, "random | greedy | two_opt | genetic")
      ->required();
  solve_cmd->add_option("--in", solve.in, "Instance file or fixture name")->required();
  solve_cmd->add_option("--seed", solve.seed, "Seed for randomized algorithms")
      ->capture_default_str();
  solve_cmd->add_option("--init", solve.init, "two_opt start tour: greedy | random")
      ->capture_default_str();
  solve_cmd->add_option("--strategy", solve.strategy, "two_opt acceptance: first | best")
      ->capture_default_str();
  solve_cmd->add_option("--max-passes", solve.max_passes, "two_opt pass cap, 0 = unbounded")
      ->capture_default_str();
  AddGaOptions(solve_cmd, solve.ga);
  solve_cmd->add_option("--tour-out", solve.tour_out, "Write the tour, one index per line");

  std::string exact_in;
  CLI::App* exact_cmd = app.add_subcommand("exact", "Exhaustive search (n <= 12)");
  exact_cmd->add_option("--in", exact_in, "Instance file or fixture name")->required();

  std::string validate_in;
  std::string validate_tour;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check a tour file and print its length");
  validate_cmd->add_option("--in", validate_in, "Instance file or fixture name")->required();
  validate_cmd->add_option("--tour", validate_tour, "Tour file")->required();

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run the benchmark protocol");
  bench_cmd->add_option("--config", bench.config_path, "Key/value config file");
  bench_cmd->add_option("--algorithms", bench.algorithms, "Algorithms (comma separated)")
      ->delimiter(',');
  bench_cmd->add_option("--instances", bench.instances, "Fixtures or files (comma separated)")
      ->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Runs per randomized algorithm");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--baseline-trials", bench.baseline_trials,
                        "Random tours averaged into the baseline");
  bench_cmd->add_option("--workers", bench.workers, "Parallel cells");
  bench_cmd->add_option("--out-dir", bench.out_dir, "Output directory")->required();
  bench_cmd->add_option("--format", bench.format, "csv | json-lines")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << SingleLine(e.what()) << " (run with --help for usage)\n";
    return kUsage;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out);
    if (*solve_cmd) return CmdSolve(solve, out);
    if (*exact_cmd) return CmdExact(exact_in, out);
    if (*validate_cmd) return CmdValidate(validate_in, validate_tour, out, err);
    if (*bench_cmd) return CmdBench(bench, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << SingleLine(e.what()) << '\n';
    return kUsage;
  } catch (const RefusalError& e) {
    err << "error: " << SingleLine(e.what()) << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << SingleLine(e.what()) << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace tspkit::cli

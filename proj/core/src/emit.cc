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
#include <charconv>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>
#include <json.hpp>

#include "tspkit/bench.h"
#include "tspkit/error.h"

namespace tspkit {
namespace {

std::string Real(double value) { return fmt::format("{:.17g}", value); }

std::string QuoteCsv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits one CSV record starting at `pos`, honoring quoted fields that may
// span lines. Advances `pos` past the record terminator and `line` by the
// number of newlines consumed.
std::vector<std::string> ReadCsvRecord(std::string_view text, std::size_t& pos,
                                       std::size_t& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  const std::size_t start_line = line;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          fields.back() += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c == '\n') {
      ++line;
      if (!fields.back().empty() && fields.back().back() == '\r') fields.back().pop_back();
      return fields;
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(start_line, 0, "unterminated quoted field");
  ++line;
  return fields;
}

template <typename T>
T FieldNumber(const std::string& field, std::size_t line, std::size_t column) {
  T out{};
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), last, out);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, column, fmt::format("invalid numeric field '{}'", field));
  }
  return out;
}

double FieldReal(const std::string& field, std::size_t line, std::size_t column) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  return FieldNumber<double>(field, line, column);
}

nlohmann::json RecordJson(const BenchRecord& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["algorithm"] = r.algorithm;
  j["trial"] = r.trial;
  j["length"] = r.length;
  j["baseline_length"] = r.baseline_length;
  j["ratio"] = r.ratio;
  j["wall_time_s"] = r.wall_time_s;
  j["iterations"] = r.iterations;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["status"] = r.status;
  j["message"] = r.message;
  return j;
}

nlohmann::json SummaryJson(const SummaryRow& s) {
  auto real = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["instance"] = s.instance;
  j["n"] = s.n;
  j["algorithm"] = s.algorithm;
  j["runs"] = s.runs;
  j["failures"] = s.failures;
  j["min_length"] = real(s.min_length);
  j["mean_length"] = real(s.mean_length);
  j["max_length"] = real(s.max_length);
  j["mean_ratio"] = real(s.mean_ratio);
  j["mean_wall_time_s"] = real(s.mean_wall_time_s);
  return j;
}

std::vector<OutputFile> PlotData(std::span<const BenchRecord> records) {
  // (algorithm) -> (n, instance) -> sums over successful records.
  struct Sums {
    double time = 0.0;
    double ratio = 0.0;
    int count = 0;
  };
  std::map<std::string, std::map<std::pair<std::int64_t, std::string>, Sums>> series;
  for (const BenchRecord& r : records) {
    auto& point = series[r.algorithm][{r.n, r.instance}];
    if (!r.ok()) continue;
    point.time += r.wall_time_s;
    point.ratio += r.ratio;
    ++point.count;
  }
  std::vector<OutputFile> files;
  for (const auto& [algorithm, points] : series) {
    std::string runtime = "# n\tvalue\n";
    std::string ratio = "# n\tvalue\n";
    for (const auto& [key, sums] : points) {
      if (sums.count == 0) continue;
      runtime += fmt::format("{}\t{}\n", key.first, Real(sums.time / sums.count));
      ratio += fmt::format("{}\t{}\n", key.first, Real(sums.ratio / sums.count));
    }
    files.push_back({"runtime_" + algorithm + ".tsv", std::move(runtime)});
    files.push_back({"ratio_" + algorithm + ".tsv", std::move(ratio)});
  }
  return files;
}

}  // namespace

EmitFormat ParseEmitFormat(std::string_view name) {
  if (name == "csv") return EmitFormat::kCsv;
  if (name == "json-lines") return EmitFormat::kJsonLines;
  if (name == "plot-data") return EmitFormat::kPlotData;
  throw ConfigError("format", fmt::format("unknown format '{}' (expected csv, "
                                          "json-lines or plot-data)",
                                          name));
}

std::string RecordsToCsv(std::span<const BenchRecord> records) {
  std::string out(kRecordsCsvHeader);
  out += '\n';
  for (const BenchRecord& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", QuoteCsv(r.instance), r.n,
                       QuoteCsv(r.algorithm), r.trial, Real(r.length),
                       Real(r.baseline_length), Real(r.ratio), Real(r.wall_time_s),
                       r.iterations, r.seed ? std::to_string(*r.seed) : std::string(),
                       QuoteCsv(r.status), QuoteCsv(r.message));
  }
  return out;
}

std::vector<BenchRecord> ParseRecordsCsv(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line = 1;
  const std::vector<std::string> header = ReadCsvRecord(text, pos, line);
  std::string joined;
  for (std::size_t i = 0; i < header.size(); ++i) {
    joined += (i ? "," : "") + header[i];
  }
  if (joined != kRecordsCsvHeader) throw ParseError(1, 0, "unexpected CSV header");

  std::vector<BenchRecord> records;
  while (pos < text.size()) {
    const std::size_t record_line = line;
    const std::vector<std::string> f = ReadCsvRecord(text, pos, line);
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != 12) {
      throw ParseError(record_line, 0, fmt::format("expected 12 fields, found {}", f.size()));
    }
    BenchRecord r;
    r.instance = f[0];
    r.n = FieldNumber<std::int64_t>(f[1], record_line, 2);
    r.algorithm = f[2];
    r.trial = FieldNumber<std::int64_t>(f[3], record_line, 4);
    r.length = FieldReal(f[4], record_line, 5);
    r.baseline_length = FieldReal(f[5], record_line, 6);
    r.ratio = FieldReal(f[6], record_line, 7);
    r.wall_time_s = FieldReal(f[7], record_line, 8);
    r.iterations = FieldNumber<std::int64_t>(f[8], record_line, 9);
    if (!f[9].empty()) r.seed = FieldNumber<Seed>(f[9], record_line, 10);
    r.status = f[10];
    r.message = f[11];
    records.push_back(std::move(r));
  }
  return records;
}

std::string SummaryToCsv(std::span<const SummaryRow> summary) {
  std::string out =
      "instance,n,algorithm,runs,failures,min_length,mean_length,max_length,"
      "mean_ratio,mean_wall_time_s\n";
  for (const SummaryRow& s : summary) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", QuoteCsv(s.instance), s.n,
                       QuoteCsv(s.algorithm), s.runs, s.failures, Real(s.min_length),
                       Real(s.mean_length), Real(s.max_length), Real(s.mean_ratio),
                       Real(s.mean_wall_time_s));
  }
  return out;
}

std::string FormatSummaryTable(std::span<const SummaryRow> summary) {
  std::string out = fmt::format("{:<12} {:>6} {:<8} {:>4} {:>4} {:>14} {:>14} {:>14} {:>8} {:>12}\n",
                                "instance", "n", "algo", "runs", "fail", "min", "mean",
                                "max", "ratio", "time_s");
  for (const SummaryRow& s : summary) {
    out += fmt::format("{:<12} {:>6} {:<8} {:>4} {:>4} {:>14.2f} {:>14.2f} {:>14.2f} {:>8.4f} {:>12.6f}\n",
                       s.instance, s.n, s.algorithm, s.runs, s.failures, s.min_length,
                       s.mean_length, s.max_length, s.mean_ratio, s.mean_wall_time_s);
  }
  return out;
}

std::vector<OutputFile> Emit(std::span<const BenchRecord> records,
                             std::span<const SummaryRow> summary, EmitFormat format) {
  switch (format) {
    case EmitFormat::kCsv:
      return {{"records.csv", RecordsToCsv(records)}, {"summary.csv", SummaryToCsv(summary)}};
    case EmitFormat::kJsonLines: {
      std::string recs;
      for (const BenchRecord& r : records) recs += RecordJson(r).dump() + "\n";
      std::string rows;
      for (const SummaryRow& s : summary) rows += SummaryJson(s).dump() + "\n";
      return {{"records.jsonl", std::move(recs)}, {"summary.jsonl", std::move(rows)}};
    }
    case EmitFormat::kPlotData:
      return PlotData(records);
  }
  throw ConfigError("format", "unknown format");
}

}  // namespace tspkit

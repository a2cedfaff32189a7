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
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "tspkit/data.h"
#include "tspkit/error.h"

namespace tspkit {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Token> Tokenize(std::string_view line, bool commas) {
  auto is_sep = [commas](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || (commas && c == ',');
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

bool IsSkippable(std::string_view line) {
  const std::string_view t = Trim(line);
  return t.empty() || t.front() == '#';
}

double ParseReal(const Token& token, std::size_t line) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(line, token.column,
                     fmt::format("'{}' is not a finite real number", token.text));
  }
  return value;
}

std::int64_t ParseInteger(const Token& token, std::size_t line) {
  std::int64_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, token.column,
                     fmt::format("'{}' is not an integer", token.text));
  }
  return value;
}

Instance ParsePlain(const std::vector<Line>& lines, const std::string& name) {
  std::vector<Point> points;
  std::size_t dimension = 0;
  for (const Line& line : lines) {
    if (IsSkippable(line.text)) continue;
    const std::vector<Token> tokens = Tokenize(line.text, /*commas=*/true);
    if (dimension == 0) {
      dimension = tokens.size();
    } else if (tokens.size() != dimension) {
      throw ParseError(line.number, 0,
                       fmt::format("expected {} coordinates, found {}",
                                   dimension, tokens.size()));
    }
    std::vector<double> coords;
    coords.reserve(tokens.size());
    for (const Token& token : tokens) coords.push_back(ParseReal(token, line.number));
    points.emplace_back(std::move(coords));
  }
  if (points.size() < 2) {
    const std::size_t last = lines.empty() ? 1 : lines.back().number;
    throw ParseError(last, 0,
                     fmt::format("need at least 2 points, found {}", points.size()));
  }
  return Instance(name, std::move(points));
}

std::string Upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

Instance ParseTsplib(const std::vector<Line>& lines) {
  std::string name;
  std::optional<std::int64_t> dimension;
  std::optional<std::string> weight_type;
  std::size_t weight_type_line = 0;
  std::size_t i = 0;
  bool in_coords = false;

  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view text = Trim(line.text);
    if (text.empty()) continue;
    const std::size_t colon = text.find(':');
    const std::string key = Upper(Trim(text.substr(0, colon)));
    const std::string_view value =
        colon == std::string_view::npos ? std::string_view() : Trim(text.substr(colon + 1));

    if (key == "NODE_COORD_SECTION") {
      in_coords = true;
      ++i;
      break;
    }
    if (key == "EOF") break;
    if (key == "NAME") {
      name = std::string(value);
    } else if (key == "DIMENSION") {
      const std::vector<Token> tokens = Tokenize(value, false);
      if (tokens.size() != 1) {
        throw ParseError(line.number, 0, "DIMENSION needs one integer value");
      }
      Token token = tokens.front();
      token.column += static_cast<std::size_t>(value.data() - line.text.data());
      dimension = ParseInteger(token, line.number);
      if (*dimension < 2) {
        throw ParseError(line.number, 0,
                         fmt::format("DIMENSION must be >= 2, got {}", *dimension));
      }
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = Upper(value);
      weight_type_line = line.number;
    } else if (key.size() > 8 && key.ends_with("_SECTION")) {
      throw UnsupportedFormatError(fmt::format(
          "line {}: TSPLIB section {} is not supported", line.number, key));
    } else if (colon == std::string_view::npos) {
      throw ParseError(line.number, 0,
                       fmt::format("expected 'KEY : value', got '{}'", text));
    }
  }

  const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  if (!weight_type) {
    throw ParseError(last_line, 0, "missing EDGE_WEIGHT_TYPE");
  }
  if (*weight_type != "EUC_2D") {
    throw UnsupportedFormatError(fmt::format(
        "line {}: EDGE_WEIGHT_TYPE {} is not supported (only EUC_2D)",
        weight_type_line, *weight_type));
  }
  if (!dimension) throw ParseError(last_line, 0, "missing DIMENSION");
  if (!in_coords) throw ParseError(last_line, 0, "missing NODE_COORD_SECTION");

  std::vector<Point> points;
  std::size_t end_line = last_line;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view text = Trim(line.text);
    if (text.empty()) continue;
    if (text == "EOF") {
      end_line = line.number;
      break;
    }
    const std::vector<Token> tokens = Tokenize(line.text, false);
    if (tokens.size() != 3) {
      throw ParseError(line.number, 0,
                       fmt::format("expected 'id x y', found {} fields",
                                   tokens.size()));
    }
    const std::int64_t id = ParseInteger(tokens[0], line.number);
    if (id != static_cast<std::int64_t>(points.size()) + 1) {
      throw ParseError(line.number, tokens[0].column,
                       fmt::format("node id {} out of sequence, expected {}", id,
                                   points.size() + 1));
    }
    points.emplace_back(std::vector<double>{ParseReal(tokens[1], line.number),
                                            ParseReal(tokens[2], line.number)});
  }
  if (static_cast<std::int64_t>(points.size()) != *dimension) {
    throw ParseError(end_line, 0,
                     fmt::format("DIMENSION is {} but {} coordinate lines were read",
                                 *dimension, points.size()));
  }
  if (name.empty()) throw ParseError(1, 0, "missing NAME");
  return Instance(name, std::move(points));
}

}  // namespace

Instance ParseInstance(std::string_view text, const std::string& name_hint) {
  const std::vector<Line> lines = SplitLines(text);
  for (const Line& line : lines) {
    if (IsSkippable(line.text)) continue;
    if (std::isalpha(static_cast<unsigned char>(Trim(line.text).front()))) {
      return ParseTsplib(lines);
    }
    break;
  }
  return ParsePlain(lines, name_hint);
}

std::string WriteInstance(const Instance& inst) {
  std::string out = fmt::format("# {}\n", inst.name());
  for (const Point& p : inst.points()) {
    out += fmt::format("{:.17g}\n", fmt::join(p.coords(), " "));
  }
  return out;
}

std::string WriteTsplib(const Instance& inst) {
  if (inst.dimension() != 2) {
    throw ValidationError(fmt::format(
        "TSPLIB EUC_2D output needs dimension 2, got {}", inst.dimension()));
  }
  std::string out = fmt::format(
      "NAME : {}\nTYPE : TSP\nDIMENSION : {}\nEDGE_WEIGHT_TYPE : EUC_2D\n"
      "NODE_COORD_SECTION\n",
      inst.name(), inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out += fmt::format("{} {:.17g} {:.17g}\n", i + 1, inst[i][0], inst[i][1]);
  }
  return out + "EOF\n";
}

}  // namespace tspkit

// Copyright 2026 The sigtrend Authors
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

#include "sigtrend/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string_view>
#include <system_error>

namespace sigtrend {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<real> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  real v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::general);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  char sep = 0;
  if (line.find(';') != std::string_view::npos) {
    sep = ';';
  } else if (line.find('\t') != std::string_view::npos) {
    sep = '\t';
  } else if (line.find(',') != std::string_view::npos) {
    sep = ',';
  }
  std::vector<std::string_view> fields;
  if (sep) {
    std::size_t start = 0;
    for (;;) {
      const auto pos = line.find(sep, start);
      fields.push_back(trim(line.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\r')) ++i;
      const auto b = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\r') ++i;
      if (i > b) fields.push_back(line.substr(b, i - b));
    }
  }
  return fields;
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string raw;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line = trim(line.substr(3));
    if (line.empty() || line.front() == '#') continue;

    auto fields = split(line);
    const bool header_candidate = first_content;
    first_content = false;
    if (fields.size() != 2) {
      if (header_candidate && fields.size() >= 2 && !parse_number(fields[0])) continue;
      std::string msg = "expected 2 columns (x, y), found " + std::to_string(fields.size());
      if (line.find(',') != std::string_view::npos && fields.size() > 2) {
        msg += " (decimal commas are not supported; use '.')";
      }
      throw CsvError(line_no, msg);
    }
    auto x = parse_number(fields[0]);
    auto y = parse_number(fields[1]);
    if (!x || !y) {
      if (header_candidate && !x && !y) continue;
      for (auto f : fields) {
        if (f.find(',') != std::string_view::npos) {
          throw CsvError(line_no, "decimal comma in '" + std::string(f) +
                                      "' is not supported; use '.'");
        }
      }
      throw CsvError(line_no, "non-numeric value in '" + std::string(line) + "'");
    }
    points.push_back({*x, *y});
  }
  return points;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_points(in);
}

}  // namespace sigtrend

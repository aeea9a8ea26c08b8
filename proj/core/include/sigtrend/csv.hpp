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

#ifndef SIGTREND_CSV_HPP
#define SIGTREND_CSV_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigtrend/dataprep.hpp"

namespace sigtrend {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two numeric columns (x, y) separated by ',', ';', tab or spaces. A
/// non-numeric first row is taken as a header. Blank lines and lines starting
/// with '#' are skipped. Only '.' is accepted as decimal separator.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

}  // namespace sigtrend

#endif  // SIGTREND_CSV_HPP

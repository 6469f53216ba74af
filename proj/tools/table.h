// Copyright 2026 The cachemarket Authors
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

// CSV tables. Numbers use the shortest round-trip form so outputs diff
// cleanly.

#ifndef CACHEMARKET_TOOLS_TABLE_H_
#define CACHEMARKET_TOOLS_TABLE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cachemarket::cli {

using Row = std::vector<std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;

  // Index of a header column; throws std::out_of_range.
  std::size_t Column(std::string_view name) const;
  double Number(std::size_t row, std::string_view column) const;
};

std::string Cell(double x);
std::string Cell(std::int64_t x);
std::string Cell(int x);
std::string Cell(bool x);
inline std::string Cell(std::string s) { return s; }
inline std::string Cell(const char* s) { return s; }

void WriteCsv(const Table& t, std::ostream& out);
std::string ToCsv(const Table& t);

// Parses what WriteCsv writes (no quoting beyond that).
Table ParseCsv(std::string_view text);

}  // namespace cachemarket::cli

#endif  // CACHEMARKET_TOOLS_TABLE_H_

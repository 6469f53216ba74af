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

#include "table.h"

#include <sstream>
#include <stdexcept>

#include "scenario.h"

namespace cachemarket::cli {
namespace {

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::size_t Table::Column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no column " + std::string(name));
}

double Table::Number(std::size_t row, std::string_view column) const {
  return std::stod(rows.at(row).at(Column(column)));
}

std::string Cell(double x) { return FormatDouble(x); }
std::string Cell(std::int64_t x) { return std::to_string(x); }
std::string Cell(int x) { return std::to_string(x); }
std::string Cell(bool x) { return x ? "true" : "false"; }

void WriteCsv(const Table& t, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << Quote(cells[i]);
    }
    out << '\n';
  };
  line(t.header);
  for (const Row& r : t.rows) line(r);
}

std::string ToCsv(const Table& t) {
  std::ostringstream os;
  WriteCsv(t, os);
  return os.str();
}

Table ParseCsv(std::string_view text) {
  Table t;
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool first = true;
  auto end_row = [&] {
    cells.push_back(cell);
    cell.clear();
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
    cells.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      end_row();
    } else {
      cell += c;
    }
  }
  if (!cell.empty() || !cells.empty()) end_row();
  return t;
}

}  // namespace cachemarket::cli

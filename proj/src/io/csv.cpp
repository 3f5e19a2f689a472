// Copyright 2026 The tlsfit Authors.
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

#include "tlsfit/io/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tlsfit/error.hpp"

namespace tlsfit::io {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitRow(std::string_view line, char delimiter,
                                  std::size_t line_number) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(ch);
      }
    } else if (ch == '"' && Trim(cell).empty()) {
      cell.clear();
      quoted = true;
      was_quoted = true;
    } else if (ch == delimiter) {
      cells.push_back(was_quoted ? cell : std::string(Trim(cell)));
      cell.clear();
      was_quoted = false;
    } else if (!(was_quoted && (ch == ' ' || ch == '\t' || ch == '\r'))) {
      cell.push_back(ch);
    }
  }
  if (quoted) {
    throw ParseError("line " + std::to_string(line_number) +
                         ": unterminated quoted cell",
                     line_number, "");
  }
  cells.push_back(was_quoted ? cell : std::string(Trim(cell)));
  return cells;
}

bool IsBlank(std::string_view line) { return Trim(line).empty(); }

}  // namespace

std::size_t CsvTable::ColumnIndex(std::string_view ref) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == ref) return i;
  }
  std::size_t index = 0;
  const auto* end = ref.data() + ref.size();
  const auto [ptr, ec] = std::from_chars(ref.data(), end, index);
  if (!ref.empty() && ec == std::errc() && ptr == end && index < header.size()) {
    return index;
  }
  throw SchemaError("no column '" + std::string(ref) + "' in header",
                    std::string(ref));
}

CsvTable ReadCsv(std::string_view text, char delimiter) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  CsvTable table;
  bool have_header = false;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_number;
    if (IsBlank(line)) continue;

    auto cells = SplitRow(line, delimiter, line_number);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw ParseError("line " + std::to_string(line_number) + ": " +
                           std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(table.header.size()),
                       line_number, "");
    }
    table.rows.push_back(std::move(cells));
    table.line_numbers.push_back(line_number);
  }
  if (!have_header) throw InvalidInput("input has no header row");
  return table;
}

std::optional<double> ParseNumber(std::string_view cell) {
  cell = Trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] =
      std::from_chars(cell.data(), end, value, std::chars_format::general);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string FormatNumber(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

PointCloud ParseCloudCsv(std::string_view text,
                         std::span<const std::string> columns,
                         const std::optional<std::string>& label_column,
                         char delimiter, const std::optional<RowFilter>& filter) {
  if (columns.empty()) throw InvalidInput("no coordinate columns selected");
  const CsvTable table = ReadCsv(text, delimiter);

  std::vector<std::size_t> selected;
  for (const auto& c : columns) selected.push_back(table.ColumnIndex(c));
  const std::optional<std::size_t> label_index =
      label_column ? std::optional(table.ColumnIndex(*label_column))
                   : std::nullopt;
  const std::optional<std::size_t> filter_index =
      filter ? std::optional(table.ColumnIndex(filter->column)) : std::nullopt;

  std::vector<Vector> points;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (filter_index && row[*filter_index] != filter->value) continue;
    Vector p;
    p.reserve(selected.size());
    for (std::size_t col : selected) {
      const auto value = ParseNumber(row[col]);
      if (!value) {
        throw ParseError("line " + std::to_string(table.line_numbers[r]) +
                             ", column '" + table.header[col] +
                             "': not a number: '" + row[col] + "'",
                         table.line_numbers[r], table.header[col]);
      }
      p.push_back(*value);
    }
    points.push_back(std::move(p));
    if (label_index) labels.push_back(row[*label_index]);
  }
  if (points.empty()) throw InvalidInput("input has no data rows");
  return PointCloud(std::move(points), std::move(labels));
}

std::vector<economy::IndicatorSeries> ParseIndicatorCsv(std::string_view text,
                                                        char delimiter) {
  const CsvTable table = ReadCsv(text, delimiter);
  const std::size_t country = table.ColumnIndex("country");
  const std::size_t year = table.ColumnIndex("year");
  std::array<std::size_t, 3> value_cols{};
  for (std::size_t k = 0; k < 3; ++k) {
    value_cols[k] = table.ColumnIndex(economy::kAxisNames[k]);
  }

  std::vector<economy::IndicatorSeries> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = table.line_numbers[r];
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& s) {
      return s.country == row[country];
    });
    if (it == out.end()) {
      out.push_back({row[country], {}, {}, {}, {}});
      it = out.end() - 1;
    }
    int y = 0;
    const std::string& ycell = row[year];
    const auto [ptr, ec] =
        std::from_chars(ycell.data(), ycell.data() + ycell.size(), y);
    if (ec != std::errc() || ptr != ycell.data() + ycell.size()) {
      throw ParseError("line " + std::to_string(line) +
                           ", column 'year': not an integer: '" + ycell + "'",
                       line, "year");
    }
    it->years.push_back(y);
    std::array<std::vector<double>*, 3> targets = {
        &it->unemployment, &it->gdp_change, &it->inflation};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto value = ParseNumber(row[value_cols[k]]);
      if (!value) {
        throw ParseError("line " + std::to_string(line) + ", column '" +
                             std::string(economy::kAxisNames[k]) +
                             "': not a number: '" + row[value_cols[k]] + "'",
                         line, std::string(economy::kAxisNames[k]));
      }
      targets[k]->push_back(*value);
    }
  }
  if (out.empty()) throw InvalidInput("indicator table has no data rows");
  for (const auto& s : out) s.Validate();
  return out;
}

std::string WriteIndicatorCsv(std::span<const economy::IndicatorSeries> data) {
  std::ostringstream out;
  out << "country,year";
  for (auto name : economy::kAxisNames) out << ',' << name;
  out << '\n';
  for (const auto& s : data) {
    s.Validate();
    for (std::size_t i = 0; i < s.years.size(); ++i) {
      out << s.country << ',' << s.years[i] << ','
          << FormatNumber(s.unemployment[i]) << ','
          << FormatNumber(s.gdp_change[i]) << ','
          << FormatNumber(s.inflation[i]) << '\n';
    }
  }
  return out.str();
}

std::string ReadInput(const std::string& path) {
  if (path == kBuiltinV4) return WriteIndicatorCsv(economy::V4Dataset());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tlsfit::io

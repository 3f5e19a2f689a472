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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlsfit/economy.hpp"
#include "tlsfit/subspace_fit.hpp"

namespace tlsfit::io {

/// Pseudo-path naming the embedded V4 indicator table.
inline constexpr std::string_view kBuiltinV4 = "builtin:v4";

/// Header row plus data rows of a delimiter-separated file. Cells are
/// whitespace-trimmed; double-quoted cells may contain the delimiter and
/// escape quotes as "".
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row

  /// Index of the column with this name, or, if no column has that name and
  /// `ref` is a non-negative integer, that 0-based index. Throws SchemaError.
  std::size_t ColumnIndex(std::string_view ref) const;
};

/// Blank lines are skipped; a UTF-8 byte order mark is ignored. Throws
/// InvalidInput without a header row and ParseError for a row whose cell
/// count differs from the header's.
CsvTable ReadCsv(std::string_view text, char delimiter = ',');

/// Keeps only the rows whose `column` equals `value`.
struct RowFilter {
  std::string column;
  std::string value;
};

/// Strict decimal number: the whole cell must parse and be finite.
std::optional<double> ParseNumber(std::string_view cell);

/// Shortest decimal that reads back to the same double.
std::string FormatNumber(double value);

/// One point per data row, coordinates from `columns` in the given order.
/// Throws SchemaError naming a missing column, ParseError with line and
/// column for a non-numeric selected cell, InvalidInput when no data rows
/// remain or fewer than one column is selected.
PointCloud ParseCloudCsv(std::string_view text,
                         std::span<const std::string> columns,
                         const std::optional<std::string>& label_column = {},
                         char delimiter = ',',
                         const std::optional<RowFilter>& filter = {});

/// Long-format indicator table with header
/// country,year,unemployment,gdp_change,inflation. Countries keep their order
/// of first appearance.
std::vector<economy::IndicatorSeries> ParseIndicatorCsv(std::string_view text,
                                                        char delimiter = ',');
std::string WriteIndicatorCsv(std::span<const economy::IndicatorSeries> data);

/// File contents, or the embedded table for kBuiltinV4. Throws InvalidInput
/// when the file cannot be read.
std::string ReadInput(const std::string& path);

}  // namespace tlsfit::io

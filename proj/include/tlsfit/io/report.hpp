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

// Requests and reports of the command-line front end, and their
// serializations. JSON and CSV carry every number at full round-trip
// precision; the text format rounds to 4 decimals.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlsfit/classic_regression.hpp"
#include "tlsfit/economy.hpp"
#include "tlsfit/io/csv.hpp"
#include "tlsfit/subspace_fit.hpp"

namespace tlsfit::io {

inline constexpr std::string_view kToolName = "tlsfit";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Geometry { kLine, kPlane };
enum class OutputFormat { kJson, kCsv, kText };

std::string_view ToString(Geometry g);
std::string_view ToString(OutputFormat f);
std::optional<Geometry> ParseGeometry(std::string_view s);
std::optional<OutputFormat> ParseOutputFormat(std::string_view s);

struct FitRequest {
  std::string input;  // file path or kBuiltinV4
  Geometry geometry = Geometry::kPlane;
  /// Coordinate columns, by header name or 0-based index. Empty selects the
  /// three indicator columns of the builtin table.
  std::vector<std::string> columns;
  std::optional<std::string> label_column;
  std::optional<RowFilter> filter;
  char delimiter = ',';
  OutputFormat output_format = OutputFormat::kJson;
  bool emit_plot = false;
  ErrorMetric error_metric = kDefaultErrorMetric;
};

struct FitReport {
  FittedModel model;
  double err = 0.0;
  std::vector<LabeledDistance> per_point;
  // metadata
  std::string input;
  ErrorMetric metric = kDefaultErrorMetric;
  std::string tool_version{kToolVersion};

  Geometry geometry() const;
};

/// Resolves defaults, reads and parses the input, and fits. Throws
/// InvalidInput when fewer than 2 columns are selected.
struct FitResult {
  PointCloud cloud;
  FitReport report;
};
FitResult RunFit(const FitRequest& request);

/// Builds a report from an already parsed cloud.
FitReport MakeFitReport(const PointCloud& cloud, Geometry geometry,
                        ErrorMetric metric, std::string input);

nlohmann::json ToJson(const FitReport& report);
/// Inverse of ToJson. Throws SchemaError on missing or mistyped fields.
FitReport FitReportFromJson(const nlohmann::json& j);
std::string Render(const FitReport& report, OutputFormat format);

nlohmann::json ToJson(const ComparisonReport& report);
std::string Render(const ComparisonReport& report, OutputFormat format);

nlohmann::json ToJson(const economy::EconomyIndicators& indicators);
std::string Render(const economy::EconomyIndicators& indicators,
                   OutputFormat format);

/// 3D scene for external viewers: trajectory points and polyline in year
/// order plus the four corners of a plane patch covering the points.
nlohmann::json SceneJson(const economy::EconomyPlane& plane,
                         const PointCloud& trajectory);

/// JSON text indented by 2 spaces, with a trailing newline.
std::string DumpJson(const nlohmann::json& j);

}  // namespace tlsfit::io

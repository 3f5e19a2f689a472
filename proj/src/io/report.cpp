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

#include "tlsfit/io/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "tlsfit/error.hpp"

namespace tlsfit::io {

using nlohmann::json;

namespace {

// Fixed 4-decimal rendering for the human-readable format; negative zero is
// printed without its sign.
std::string Fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string Tuple4(std::span<const double> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += Fixed4(v[i]);
  }
  return out + ")";
}

// Quotes a CSV cell when it contains a delimiter, quote or newline.
std::string CsvCell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// field,key,value rows; the generic tabular form of a report.
class KeyValueCsv {
 public:
  KeyValueCsv() { out_ << "field,key,value\n"; }

  void Add(std::string_view field, std::string_view key,
           std::string_view value) {
    out_ << CsvCell(field) << ',' << CsvCell(key) << ',' << CsvCell(value)
         << '\n';
  }
  void Add(std::string_view field, std::string_view key, double value) {
    Add(field, key, FormatNumber(value));
  }
  void AddVector(std::string_view field, std::span<const double> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      Add(field, std::to_string(i), v[i]);
    }
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

json ResidualsJson(const ResidualStats& r) {
  return json{{"sum_sq", r.sum_sq},
              {"root_sum_sq", r.root_sum_sq},
              {"rms", r.rms},
              {"sum_abs", r.sum_abs}};
}

json LabeledJson(std::span<const LabeledDistance> d) {
  json arr = json::array();
  for (const auto& x : d) {
    arr.push_back(json{{"label", x.label}, {"distance", x.distance}});
  }
  return arr;
}

template <typename T>
T Field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("report field '") + key + "': " + e.what(),
                      key);
  }
}

json OptionalJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json AffineJson(const std::optional<AffineLine2D>& line) {
  if (!line) return nullptr;
  return json{{"slope", line->slope}, {"intercept", line->intercept}};
}

std::string AffineText(const std::optional<AffineLine2D>& line,
                       std::string_view unavailable_reason) {
  if (!line) return "unavailable (" + std::string(unavailable_reason) + ")";
  if (line->orientation == LineOrientation::kYOnX) {
    return "y = " + Fixed4(line->slope) + " x + " + Fixed4(line->intercept);
  }
  return "x = " + Fixed4(line->slope) + " y + " + Fixed4(line->intercept);
}

}  // namespace

std::string_view ToString(Geometry g) {
  return g == Geometry::kLine ? "line" : "plane";
}

std::string_view ToString(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      return "text";
  }
  return "json";
}

std::optional<Geometry> ParseGeometry(std::string_view s) {
  if (s == "line") return Geometry::kLine;
  if (s == "plane") return Geometry::kPlane;
  return std::nullopt;
}

std::optional<OutputFormat> ParseOutputFormat(std::string_view s) {
  for (auto f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText}) {
    if (ToString(f) == s) return f;
  }
  return std::nullopt;
}

Geometry FitReport::geometry() const {
  return std::holds_alternative<FittedLine>(model) ? Geometry::kLine
                                                   : Geometry::kPlane;
}

FitReport MakeFitReport(const PointCloud& cloud, Geometry geometry,
                        ErrorMetric metric, std::string input) {
  FitReport report;
  if (geometry == Geometry::kLine) {
    report.model = FitLine(cloud);
  } else {
    report.model = FitHyperplane(cloud);
  }
  const ResidualStats& stats = std::visit(
      [](const auto& m) -> const ResidualStats& { return m.error; },
      report.model);
  report.err = stats.Value(metric);
  report.metric = metric;
  report.input = std::move(input);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    report.per_point.push_back({cloud.LabelOf(i), stats.per_point_distance[i]});
  }
  return report;
}

FitResult RunFit(const FitRequest& request) {
  std::vector<std::string> columns = request.columns;
  std::optional<std::string> label = request.label_column;
  if (request.input == kBuiltinV4) {
    if (columns.empty()) {
      columns.assign(economy::kAxisNames.begin(), economy::kAxisNames.end());
    }
    if (!label) label = "year";
  }
  if (columns.size() < 2) {
    throw InvalidInput("a fit needs at least 2 coordinate columns");
  }
  const std::string text = ReadInput(request.input);
  PointCloud cloud =
      ParseCloudCsv(text, columns, label, request.delimiter, request.filter);
  std::string provenance = request.input;
  if (request.filter) {
    provenance += " [" + request.filter->column + "=" + request.filter->value + "]";
  }
  FitReport report = MakeFitReport(cloud, request.geometry,
                                   request.error_metric, std::move(provenance));
  return FitResult{std::move(cloud), std::move(report)};
}

json ToJson(const FitReport& report) {
  json model;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FittedLine>) {
          model = json{{"anchor", m.anchor}, {"direction", m.direction}};
        } else {
          model = json{{"normal", m.normal},
                       {"centroid", m.centroid},
                       {"offset", m.offset}};
        }
        model["residuals"] = ResidualsJson(m.error);
      },
      report.model);
  return json{{"tool", kToolName},
              {"version", report.tool_version},
              {"input", report.input},
              {"geometry", ToString(report.geometry())},
              {"metric", ToString(report.metric)},
              {"err", report.err},
              {"model", model},
              {"per_point", LabeledJson(report.per_point)}};
}

FitReport FitReportFromJson(const json& j) {
  FitReport report;
  report.input = Field<std::string>(j, "input");
  report.tool_version = Field<std::string>(j, "version");
  report.err = Field<double>(j, "err");
  const auto metric = ParseErrorMetric(Field<std::string>(j, "metric"));
  if (!metric) throw SchemaError("report field 'metric': unknown metric", "metric");
  report.metric = *metric;
  const auto geometry = ParseGeometry(Field<std::string>(j, "geometry"));
  if (!geometry) {
    throw SchemaError("report field 'geometry': unknown geometry", "geometry");
  }

  const json& per_point = j.at("per_point");
  std::vector<double> distances;
  for (const auto& p : per_point) {
    report.per_point.push_back(
        {Field<std::string>(p, "label"), Field<double>(p, "distance")});
    distances.push_back(report.per_point.back().distance);
  }

  const json& m = Field<json>(j, "model");
  const json& r = Field<json>(m, "residuals");
  ResidualStats stats;
  stats.per_point_distance = std::move(distances);
  stats.sum_sq = Field<double>(r, "sum_sq");
  stats.root_sum_sq = Field<double>(r, "root_sum_sq");
  stats.rms = Field<double>(r, "rms");
  stats.sum_abs = Field<double>(r, "sum_abs");

  if (*geometry == Geometry::kLine) {
    report.model = FittedLine{Field<Vector>(m, "anchor"),
                              Field<Vector>(m, "direction"), std::move(stats)};
  } else {
    report.model =
        FittedHyperplane{Field<Vector>(m, "normal"), Field<Vector>(m, "centroid"),
                         Field<double>(m, "offset"), std::move(stats)};
  }
  return report;
}

std::string Render(const FitReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return DumpJson(ToJson(report));

  if (format == OutputFormat::kCsv) {
    KeyValueCsv csv;
    csv.Add("tool", "", kToolName);
    csv.Add("version", "", report.tool_version);
    csv.Add("input", "", report.input);
    csv.Add("geometry", "", ToString(report.geometry()));
    csv.Add("metric", "", ToString(report.metric));
    csv.Add("err", "", report.err);
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, FittedLine>) {
            csv.AddVector("anchor", m.anchor);
            csv.AddVector("direction", m.direction);
          } else {
            csv.AddVector("normal", m.normal);
            csv.AddVector("centroid", m.centroid);
            csv.Add("offset", "", m.offset);
          }
          csv.Add("sum_sq", "", m.error.sum_sq);
          csv.Add("root_sum_sq", "", m.error.root_sum_sq);
          csv.Add("rms", "", m.error.rms);
          csv.Add("sum_abs", "", m.error.sum_abs);
        },
        report.model);
    for (const auto& p : report.per_point) csv.Add("distance", p.label, p.distance);
    return csv.str();
  }

  std::ostringstream out;
  out << kToolName << ' ' << report.tool_version << "  input: " << report.input
      << '\n';
  out << "geometry: " << ToString(report.geometry()) << '\n';
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FittedLine>) {
          out << "point (centroid): " << Tuple4(m.anchor) << '\n';
          out << "direction:        " << Tuple4(m.direction) << '\n';
        } else {
          out << "normal vector: " << Tuple4(m.normal) << '\n';
          out << "centroid:      " << Tuple4(m.centroid) << '\n';
          out << "offset:        " << Fixed4(m.offset) << '\n';
        }
      },
      report.model);
  out << "error (" << ToString(report.metric) << "): " << Fixed4(report.err)
      << '\n';
  out << "orthogonal distances:\n";
  for (const auto& p : report.per_point) {
    out << "  " << p.label << "  " << Fixed4(p.distance) << '\n';
  }
  return out.str();
}

json ToJson(const ComparisonReport& report) {
  json tls{{"anchor", report.tls.anchor},
           {"direction", report.tls.direction},
           {"angle_deg", report.tls_angle_deg},
           {"sum_sq", report.tls.error.sum_sq},
           {"vertical", !report.tls_affine.has_value()}};
  if (report.tls_affine) {
    tls["slope"] = report.tls_affine->slope;
    tls["intercept"] = report.tls_affine->intercept;
  }
  return json{
      {"tool", kToolName},
      {"version", kToolVersion},
      {"centroid", report.centroid},
      {"ols", AffineJson(report.ols)},
      {"conjugate", AffineJson(report.conjugate)},
      {"tls", tls},
      {"angles_deg",
       {{"ols_conjugate", OptionalJson(report.angle_ols_conjugate_deg)},
        {"ols_tls", OptionalJson(report.angle_ols_tls_deg)},
        {"conjugate_tls", OptionalJson(report.angle_conjugate_tls_deg)}}},
      {"tls_between_classical",
       report.tls_between_classical ? json(*report.tls_between_classical)
                                    : json(nullptr)}};
}

std::string Render(const ComparisonReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return DumpJson(ToJson(report));

  if (format == OutputFormat::kCsv) {
    KeyValueCsv csv;
    csv.AddVector("centroid", report.centroid);
    if (report.ols) {
      csv.Add("ols", "slope", report.ols->slope);
      csv.Add("ols", "intercept", report.ols->intercept);
    }
    if (report.conjugate) {
      csv.Add("conjugate", "slope", report.conjugate->slope);
      csv.Add("conjugate", "intercept", report.conjugate->intercept);
    }
    csv.AddVector("tls_anchor", report.tls.anchor);
    csv.AddVector("tls_direction", report.tls.direction);
    if (report.tls_affine) {
      csv.Add("tls", "slope", report.tls_affine->slope);
      csv.Add("tls", "intercept", report.tls_affine->intercept);
    }
    csv.Add("tls", "sum_sq", report.tls.error.sum_sq);
    if (report.angle_ols_conjugate_deg) {
      csv.Add("angle_deg", "ols_conjugate", *report.angle_ols_conjugate_deg);
    }
    if (report.angle_ols_tls_deg) {
      csv.Add("angle_deg", "ols_tls", *report.angle_ols_tls_deg);
    }
    if (report.angle_conjugate_tls_deg) {
      csv.Add("angle_deg", "conjugate_tls", *report.angle_conjugate_tls_deg);
    }
    return csv.str();
  }

  std::ostringstream out;
  out << "centroid:            " << Tuple4(report.centroid) << '\n';
  out << "classical y on x:    " << AffineText(report.ols, "x is constant")
      << '\n';
  out << "classical x on y:    "
      << AffineText(report.conjugate, "y is constant") << '\n';
  out << "orthogonal:          ";
  if (report.tls_affine) {
    out << AffineText(report.tls_affine, "") << '\n';
  } else {
    out << "x = " << Fixed4(report.centroid[0]) << " (vertical)\n";
  }
  out << "orthogonal sum_sq:   " << Fixed4(report.tls.error.sum_sq) << '\n';
  auto angle = [&](std::string_view name, const std::optional<double>& v) {
    out << "angle " << name << ": " << (v ? Fixed4(*v) : std::string("n/a"))
        << '\n';
  };
  angle("classical/conjugate (deg)", report.angle_ols_conjugate_deg);
  angle("classical/orthogonal (deg)", report.angle_ols_tls_deg);
  angle("conjugate/orthogonal (deg)", report.angle_conjugate_tls_deg);
  return out.str();
}

json ToJson(const economy::EconomyIndicators& indicators) {
  json countries = json::array();
  json names = json::array();
  for (std::size_t i = 0; i < indicators.planes.size(); ++i) {
    const auto& p = indicators.planes[i];
    json slopes;
    for (std::size_t k = 0; k < economy::kCoordinatePlanes.size(); ++k) {
      slopes[std::string(economy::kCoordinatePlanes[k].name)] =
          indicators.slopes_deg[i][k];
    }
    countries.push_back(json{{"country", p.country},
                             {"normal", p.plane.normal},
                             {"centroid", p.plane.centroid},
                             {"offset", p.plane.offset},
                             {"err", p.err_reported},
                             {"residuals", ResidualsJson(p.plane.error)},
                             {"yearly_distances", LabeledJson(p.yearly_distances)},
                             {"slopes_deg", slopes}});
    names.push_back(p.country);
  }
  const auto metric = indicators.planes.empty() ? kDefaultErrorMetric
                                                : indicators.planes[0].metric;
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"axes", economy::kAxisNames},
              {"metric", ToString(metric)},
              {"planes", countries},
              {"pairwise_angles_deg",
               {{"countries", names}, {"matrix", indicators.pairwise_angles_deg}}}};
}

std::string Render(const economy::EconomyIndicators& indicators,
                   OutputFormat format) {
  if (format == OutputFormat::kJson) return DumpJson(ToJson(indicators));

  const auto& planes = indicators.planes;
  if (format == OutputFormat::kCsv) {
    std::ostringstream out;
    out << "country,normal_0,normal_1,normal_2,centroid_0,centroid_1,"
           "centroid_2,err";
    for (const auto& cp : economy::kCoordinatePlanes) {
      out << ",slope_" << cp.name;
    }
    for (const auto& p : planes) out << ",angle_" << CsvCell(p.country);
    out << '\n';
    for (std::size_t i = 0; i < planes.size(); ++i) {
      out << CsvCell(planes[i].country);
      for (double x : planes[i].plane.normal) out << ',' << FormatNumber(x);
      for (double x : planes[i].plane.centroid) out << ',' << FormatNumber(x);
      out << ',' << FormatNumber(planes[i].err_reported);
      for (double x : indicators.slopes_deg[i]) out << ',' << FormatNumber(x);
      for (double x : indicators.pairwise_angles_deg[i]) {
        out << ',' << FormatNumber(x);
      }
      out << '\n';
    }
    return out.str();
  }

  std::ostringstream out;
  out << "Normal vectors, centroids and errors ("
      << (planes.empty() ? "" : ToString(planes[0].metric)) << ")\n";
  for (const auto& p : planes) {
    out << p.country << "  " << Tuple4(p.plane.normal) << "  "
        << Tuple4(p.plane.centroid) << "  " << Fixed4(p.err_reported) << '\n';
  }
  std::size_t name_width = 0;
  for (const auto& p : planes) name_width = std::max(name_width, p.country.size());
  out << "\nAngles between planes (deg)\n" << std::string(name_width, ' ');
  for (const auto& p : planes) out << std::setw(10) << p.country;
  out << '\n';
  for (std::size_t i = 0; i < planes.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(name_width)) << planes[i].country
        << std::right;
    for (double a : indicators.pairwise_angles_deg[i]) out << std::setw(10) << Fixed4(a);
    out << '\n';
  }
  out << "\nAngles to coordinate planes (deg)\n";
  for (std::size_t i = 0; i < planes.size(); ++i) {
    out << planes[i].country;
    for (std::size_t k = 0; k < economy::kCoordinatePlanes.size(); ++k) {
      out << "  " << economy::kCoordinatePlanes[k].name << ' '
          << Fixed4(indicators.slopes_deg[i][k]);
    }
    out << '\n';
  }
  return out.str();
}

json SceneJson(const economy::EconomyPlane& plane, const PointCloud& trajectory) {
  const auto axes = PrincipalAxes(trajectory);
  const Vector& u = axes.eigenvectors[0];
  const Vector& v = axes.eigenvectors[1];
  const Vector& c = plane.plane.centroid;
  double su = 0.0;
  double sv = 0.0;
  for (const auto& p : trajectory.points()) {
    const Vector r = Subtract(p, c);
    su = std::max(su, std::abs(Dot(r, u)));
    sv = std::max(sv, std::abs(Dot(r, v)));
  }
  json corners = json::array();
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{-1.0, 1.0},
                      std::pair{-1.0, -1.0}, std::pair{1.0, -1.0}}) {
    corners.push_back(AddScaled(AddScaled(c, a * su, u), b * sv, v));
  }
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"country", plane.country},
              {"axes", economy::kAxisNames},
              {"labels", trajectory.labels()},
              {"points", trajectory.points()},
              {"trajectory", trajectory.points()},
              {"plane",
               {{"normal", plane.plane.normal},
                {"centroid", c},
                {"corners", corners}}}};
}

std::string DumpJson(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tlsfit::io

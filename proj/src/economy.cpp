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

#include "tlsfit/economy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tlsfit/error.hpp"

namespace tlsfit::economy {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double AngleFromAbsCosine(double c) {
  return std::acos(std::clamp(std::abs(c), 0.0, 1.0)) * kRadToDeg;
}

const std::vector<double>& Column(const IndicatorSeries& s,
                                  std::string_view column) {
  if (column == kAxisNames[0]) return s.unemployment;
  if (column == kAxisNames[1]) return s.gdp_change;
  if (column == kAxisNames[2]) return s.inflation;
  throw InvalidInput("unknown indicator column '" + std::string(column) + "'");
}

}  // namespace

void IndicatorSeries::Validate() const {
  const std::size_t n = years.size();
  if (unemployment.size() != n || gdp_change.size() != n ||
      inflation.size() != n) {
    throw InvalidInput("indicator series '" + country +
                       "' has columns of different lengths");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (years[i] <= years[i - 1]) {
      throw InvalidInput("indicator series '" + country +
                         "': years are not strictly increasing at " +
                         std::to_string(years[i]));
    }
  }
}

PointCloud Trajectory(const IndicatorSeries& series) {
  series.Validate();
  std::vector<Vector> points;
  std::vector<std::string> labels;
  points.reserve(series.years.size());
  labels.reserve(series.years.size());
  for (std::size_t i = 0; i < series.years.size(); ++i) {
    points.push_back(
        {series.unemployment[i], series.gdp_change[i], series.inflation[i]});
    labels.push_back(std::to_string(series.years[i]));
  }
  return PointCloud(std::move(points), std::move(labels));
}

EconomyPlane FitEconomyPlane(const IndicatorSeries& series,
                             ErrorMetric metric) {
  const PointCloud cloud = Trajectory(series);
  if (cloud.size() < 3) {
    throw InvalidInput("economy plane of '" + series.country +
                       "' needs at least 3 years");
  }
  EconomyPlane out;
  out.country = series.country;
  out.plane = FitHyperplane(cloud);
  out.metric = metric;
  out.err_reported = out.plane.error.Value(metric);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    out.yearly_distances.push_back(
        {cloud.LabelOf(i), out.plane.error.per_point_distance[i]});
  }
  return out;
}

double PlaneAngleDeg(std::span<const double> normal_a,
                     std::span<const double> normal_b) {
  if (normal_a.size() != normal_b.size()) {
    throw InvalidInput("plane normals have different dimensions");
  }
  return AngleFromAbsCosine(Dot(normal_a, normal_b) /
                            (Norm(normal_a) * Norm(normal_b)));
}

double PlaneAngleDeg(const EconomyPlane& a, const EconomyPlane& b) {
  return PlaneAngleDeg(a.plane.normal, b.plane.normal);
}

std::array<double, 3> PlaneSlopesDeg(const EconomyPlane& p) {
  if (p.plane.normal.size() != 3) {
    throw InvalidInput("plane slopes are defined for 3D planes only");
  }
  const double norm = Norm(p.plane.normal);
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < kCoordinatePlanes.size(); ++k) {
    out[k] = AngleFromAbsCosine(
        p.plane.normal[kCoordinatePlanes[k].normal_axis] / norm);
  }
  return out;
}

EconomyIndicators ComputeIndicators(std::span<const IndicatorSeries> series,
                                    ErrorMetric metric) {
  EconomyIndicators out;
  for (const auto& s : series) {
    out.planes.push_back(FitEconomyPlane(s, metric));
    out.slopes_deg.push_back(PlaneSlopesDeg(out.planes.back()));
  }
  const std::size_t n = out.planes.size();
  out.pairwise_angles_deg.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double angle = PlaneAngleDeg(out.planes[i], out.planes[j]);
      out.pairwise_angles_deg[i][j] = angle;
      out.pairwise_angles_deg[j][i] = angle;
    }
  }
  return out;
}

const std::vector<IndicatorSeries>& V4Dataset() {
  static const std::vector<IndicatorSeries> kData = {
      {"SK",
       {1994, 1995, 1996, 1997, 1998, 1999, 2000},
       {13.7, 13.1, 11.3, 11.8, 12.5, 16.2, 18.5},
       {4.8, 6.7, 6.2, 6.2, 4.1, 1.9, 2.0},
       {13.4, 9.9, 5.8, 6.1, 6.7, 10.6, 11.5}},
      {"PL",
       {1994, 1995, 1996, 1997, 1998, 1999, 2000},
       {16.0, 14.9, 13.5, 10.5, 10.4, 13.0, 13.5},
       {5.2, 7.0, 6.0, 6.8, 4.8, 4.1, 5.0},
       {33.2, 28.0, 19.9, 14.8, 11.6, 7.3, 9.9}},
      {"CZ",
       {1994, 1995, 1996, 1997, 1998, 1999, 2000},
       {3.2, 2.9, 3.5, 5.2, 7.5, 9.4, 8.7},
       {2.2, 5.9, 4.8, -0.1, -2.2, -0.2, 2.5},
       {10.0, 9.1, 8.8, 8.5, 10.7, 2.1, 4.1}},
      {"HU",
       {1994, 1995, 1996, 1997, 1998, 1999, 2000},
       {11.2, 10.5, 9.2, 7.7, 7.0, 6.5, 6.5},
       {2.9, 1.5, 1.3, 4.4, 5.1, 4.5, 5.6},
       {18.8, 28.2, 23.6, 18.3, 14.3, 10.0, 9.3}},
  };
  return kData;
}

const IndicatorSeries& FindSeries(std::span<const IndicatorSeries> dataset,
                                  std::string_view country) {
  for (const auto& s : dataset) {
    if (s.country == country) return s;
  }
  throw InvalidInput("no series for country '" + std::string(country) + "'");
}

double ValueAt(const IndicatorSeries& series, std::string_view column,
               int year) {
  const auto it = std::find(series.years.begin(), series.years.end(), year);
  if (it == series.years.end()) {
    throw InvalidInput("series '" + series.country + "' has no year " +
                       std::to_string(year));
  }
  return Column(series, column)[static_cast<std::size_t>(
      it - series.years.begin())];
}

}  // namespace tlsfit::economy

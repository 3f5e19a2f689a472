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

// State-space view of a national economy.
//
// Each year is a point (unemployment, GDP change, inflation) in a 3D state
// space; the sequence of years is the economy's phase trajectory. The
// orthogonal-regression plane through that trajectory, described by its unit
// normal and the centroid, characterizes the economy as a whole.

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlsfit/subspace_fit.hpp"

namespace tlsfit::economy {

/// Yearly macro indicators of one country, all in percent.
struct IndicatorSeries {
  std::string country;
  std::vector<int> years;
  std::vector<double> unemployment;
  std::vector<double> gdp_change;
  std::vector<double> inflation;

  /// Throws InvalidInput unless all lists have equal length and years are
  /// strictly increasing.
  void Validate() const;

  bool operator==(const IndicatorSeries&) const = default;
};

/// State-space axes, in coordinate order.
inline constexpr std::array<std::string_view, 3> kAxisNames = {
    "unemployment", "gdp_change", "inflation"};

/// Coordinate planes the economy plane is compared against, as
/// {name, index of the coordinate axis normal to it}.
struct CoordinatePlane {
  std::string_view name;
  std::size_t normal_axis;
};
inline constexpr std::array<CoordinatePlane, 3> kCoordinatePlanes = {{
    {"unemployment-gdp", 2},
    {"unemployment-inflation", 1},
    {"gdp-inflation", 0},
}};

struct EconomyPlane {
  std::string country;
  FittedHyperplane plane;
  std::vector<LabeledDistance> yearly_distances;
  double err_reported = 0.0;
  ErrorMetric metric = kDefaultErrorMetric;
};

struct EconomyIndicators {
  std::vector<EconomyPlane> planes;
  /// Dihedral angles between every pair of planes; symmetric, zero diagonal.
  std::vector<std::vector<double>> pairwise_angles_deg;
  /// Per plane, the angle to each of kCoordinatePlanes.
  std::vector<std::array<double, 3>> slopes_deg;
};

/// Phase trajectory: one point per year in (unemployment, gdp, inflation)
/// order, labeled with the year.
PointCloud Trajectory(const IndicatorSeries& series);

/// Fits the plane of the trajectory. Needs at least 3 years.
EconomyPlane FitEconomyPlane(const IndicatorSeries& series,
                             ErrorMetric metric = kDefaultErrorMetric);

/// arccos(|n_a . n_b|) in degrees.
double PlaneAngleDeg(const EconomyPlane& a, const EconomyPlane& b);
double PlaneAngleDeg(std::span<const double> normal_a,
                     std::span<const double> normal_b);

/// Angle between the economy plane and each coordinate plane, in the order
/// of kCoordinatePlanes.
std::array<double, 3> PlaneSlopesDeg(const EconomyPlane& p);

EconomyIndicators ComputeIndicators(std::span<const IndicatorSeries> series,
                                    ErrorMetric metric = kDefaultErrorMetric);

/// Unemployment, GDP change and inflation of the V4 countries, 1994-2000,
/// in the order SK, PL, CZ, HU.
///
/// The HU inflation column is kept verbatim; its mean (17.5) disagrees with
/// the HU reference centroid (16.0714).
const std::vector<IndicatorSeries>& V4Dataset();

/// Throws InvalidInput when the country is missing.
const IndicatorSeries& FindSeries(std::span<const IndicatorSeries> dataset,
                                  std::string_view country);

/// Value of `series` for a given year of one column ("unemployment",
/// "gdp_change", "inflation"). Throws InvalidInput if absent.
double ValueAt(const IndicatorSeries& series, std::string_view column,
               int year);

}  // namespace tlsfit::economy

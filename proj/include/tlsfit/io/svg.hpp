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

// Deterministic SVG charts: an 800x600 canvas, "nice" 1-2-5 axis ticks and
// fixed-precision coordinates, so identical input gives identical bytes.
//
// Data points are <circle class="point">, fitted lines are
// <line class="model">, connected series are <polyline class="series">.

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "tlsfit/classic_regression.hpp"
#include "tlsfit/economy.hpp"
#include "tlsfit/io/report.hpp"

namespace tlsfit::io {

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 600;

using Point2 = std::array<double, 2>;

struct ChartSeries {
  std::string name;
  std::vector<Point2> points;
  bool connect = false;  // draw a polyline through the points in order
};

/// Unbounded line, clipped to the plot area when drawn.
struct ChartLine {
  std::string name;
  Point2 anchor{};
  Point2 direction{};
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
  std::vector<ChartLine> lines;
};

/// Tick positions covering [lo, hi] with a 1, 2 or 5 times 10^k step.
std::vector<double> NiceTicks(double lo, double hi, int target_count = 6);

/// Throws InvalidInput when the chart has no points.
std::string RenderSvg(const Chart& chart);

/// Projects a fit onto the coordinate axes `axes` (two distinct indices).
/// Lines are drawn when their projection is not a single point; hyperplanes
/// in 2D are drawn as their line. Throws InvalidInput for bad axes.
Chart ChartFromFit(const FitReport& report, const PointCloud& cloud,
                   std::array<std::size_t, 2> axes,
                   std::span<const std::string> axis_names = {});

/// Data points with the classical, conjugate and orthogonal lines.
Chart ChartFromComparison(const ComparisonReport& report,
                          std::span<const double> xs,
                          std::span<const double> ys);

/// One indicator over time, a connected series per country.
Chart IndicatorTimeSeriesChart(std::span<const economy::IndicatorSeries> data,
                               std::size_t indicator);

/// Two indicators of one country against each other, connected in year
/// order (the 2D projection of its phase trajectory).
Chart PhaseProjectionChart(const economy::IndicatorSeries& series,
                           std::array<std::size_t, 2> axes);

}  // namespace tlsfit::io

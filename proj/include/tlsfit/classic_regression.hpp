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

// Classical (vertical-offset) least squares lines, kept alongside the
// orthogonal fit for comparison. Regressing y on x and x on y gives two
// different "conjugate" lines; the orthogonal line lies between them.

#pragma once

#include <optional>
#include <span>
#include <string>

#include "tlsfit/subspace_fit.hpp"

namespace tlsfit {

enum class LineOrientation {
  kYOnX,  // y = slope * x + intercept
  kXOnY,  // x = slope * y + intercept
};

struct AffineLine2D {
  double slope = 0.0;
  double intercept = 0.0;
  LineOrientation orientation = LineOrientation::kYOnX;

  /// Angle of the undirected line from the x axis, in degrees in [0, 180).
  double AngleFromXAxisDeg() const;
  /// Whether (x, y) satisfies the line equation within `tolerance`.
  bool Contains(double x, double y, double tolerance) const;
};

/// Regression of ys on xs minimizing squared vertical offsets.
/// Throws InvalidInput on length mismatch or fewer than 2 points, and
/// DegenerateGeometry when all xs are equal.
AffineLine2D OlsLine(std::span<const double> xs, std::span<const double> ys);

/// Regression of xs on ys (the conjugate line x = c * y + d).
/// Throws DegenerateGeometry when all ys are equal.
AffineLine2D ConjugateLine(std::span<const double> xs,
                           std::span<const double> ys);

/// Angle between two undirected 2D directions, degrees in [0, 90].
double LineAngleDeg(double angle_a_deg, double angle_b_deg);

struct ComparisonReport {
  Vector centroid;  // (x mean, y mean)
  std::optional<AffineLine2D> ols;        // absent for constant xs
  std::optional<AffineLine2D> conjugate;  // absent for constant ys
  FittedLine tls;
  /// y = slope * x + intercept form of the orthogonal line; absent when it is
  /// vertical.
  std::optional<AffineLine2D> tls_affine;

  double tls_angle_deg = 0.0;  // [0, 180)
  std::optional<double> angle_ols_conjugate_deg;
  std::optional<double> angle_ols_tls_deg;
  std::optional<double> angle_conjugate_tls_deg;
  /// Orthogonal line's angle lies weakly between the two classical lines.
  /// Absent when either classical line is unavailable.
  std::optional<bool> tls_between_classical;
};

/// Fits all three lines to the same data. Throws when the orthogonal fit is
/// impossible (fewer than 2 points, all points equal); classical lines that do
/// not exist are left empty.
ComparisonReport CompareOlsTls(std::span<const double> xs,
                               std::span<const double> ys);

}  // namespace tlsfit

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

#include "tlsfit/classic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tlsfit/error.hpp"

namespace tlsfit {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kVerticalTolerance = 1e-12;
constexpr double kBetweenSlackDeg = 1e-9;

void CheckPaired(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InvalidInput("x and y lengths differ: " + std::to_string(xs.size()) +
                       " vs " + std::to_string(ys.size()));
  }
  if (xs.size() < 2) throw InvalidInput("regression needs at least 2 points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw InvalidInput("non-finite value at index " + std::to_string(i));
    }
  }
}

bool AllEqual(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
}

double Mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

// Regresses `dependent` on `regressor`: slope = S_rd / S_rr.
AffineLine2D Regress(std::span<const double> regressor,
                     std::span<const double> dependent,
                     LineOrientation orientation) {
  const double mr = Mean(regressor);
  const double md = Mean(dependent);
  double srr = 0.0;
  double srd = 0.0;
  for (std::size_t i = 0; i < regressor.size(); ++i) {
    const double r = regressor[i] - mr;
    srr += r * r;
    srd += r * (dependent[i] - md);
  }
  const double slope = srd / srr;
  return AffineLine2D{slope, md - slope * mr, orientation};
}

double NormalizeHalfTurn(double deg) {
  while (deg < 0.0) deg += 180.0;
  while (deg >= 180.0) deg -= 180.0;
  return deg;
}

}  // namespace

double AffineLine2D::AngleFromXAxisDeg() const {
  if (orientation == LineOrientation::kYOnX) {
    return NormalizeHalfTurn(std::atan(slope) * kRadToDeg);
  }
  // Direction (slope, 1).
  return NormalizeHalfTurn(std::atan2(1.0, slope) * kRadToDeg);
}

bool AffineLine2D::Contains(double x, double y, double tolerance) const {
  if (orientation == LineOrientation::kYOnX) {
    return std::abs(slope * x + intercept - y) <= tolerance;
  }
  return std::abs(slope * y + intercept - x) <= tolerance;
}

AffineLine2D OlsLine(std::span<const double> xs, std::span<const double> ys) {
  CheckPaired(xs, ys);
  if (AllEqual(xs)) {
    throw DegenerateGeometry(
        "all x values are equal; y-on-x regression is undefined",
        {Mean(xs), Mean(ys)}, {{0.0, 1.0}});
  }
  return Regress(xs, ys, LineOrientation::kYOnX);
}

AffineLine2D ConjugateLine(std::span<const double> xs,
                           std::span<const double> ys) {
  CheckPaired(xs, ys);
  if (AllEqual(ys)) {
    throw DegenerateGeometry(
        "all y values are equal; x-on-y regression is undefined",
        {Mean(xs), Mean(ys)}, {{1.0, 0.0}});
  }
  return Regress(ys, xs, LineOrientation::kXOnY);
}

double LineAngleDeg(double angle_a_deg, double angle_b_deg) {
  const double diff = NormalizeHalfTurn(angle_a_deg - angle_b_deg);
  return std::min(diff, 180.0 - diff);
}

ComparisonReport CompareOlsTls(std::span<const double> xs,
                               std::span<const double> ys) {
  CheckPaired(xs, ys);
  std::vector<Vector> points;
  points.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) points.push_back({xs[i], ys[i]});
  const PointCloud cloud(std::move(points));

  ComparisonReport report;
  report.tls = FitLine(cloud);
  report.centroid = report.tls.anchor;
  if (!AllEqual(xs)) report.ols = Regress(xs, ys, LineOrientation::kYOnX);
  if (!AllEqual(ys)) report.conjugate = Regress(ys, xs, LineOrientation::kXOnY);

  const double dx = report.tls.direction[0];
  const double dy = report.tls.direction[1];
  report.tls_angle_deg = NormalizeHalfTurn(std::atan2(dy, dx) * kRadToDeg);
  if (std::abs(dx) > kVerticalTolerance) {
    const double slope = dy / dx;
    report.tls_affine = AffineLine2D{
        slope, report.centroid[1] - slope * report.centroid[0],
        LineOrientation::kYOnX};
  }

  if (report.ols) {
    report.angle_ols_tls_deg =
        LineAngleDeg(report.ols->AngleFromXAxisDeg(), report.tls_angle_deg);
  }
  if (report.conjugate) {
    report.angle_conjugate_tls_deg = LineAngleDeg(
        report.conjugate->AngleFromXAxisDeg(), report.tls_angle_deg);
  }
  if (report.ols && report.conjugate) {
    const double a = report.ols->AngleFromXAxisDeg();
    const double b = report.conjugate->AngleFromXAxisDeg();
    report.angle_ols_conjugate_deg = LineAngleDeg(a, b);
    const double lo = std::min(a, b) - kBetweenSlackDeg;
    const double hi = std::max(a, b) + kBetweenSlackDeg;
    report.tls_between_classical =
        report.tls_angle_deg >= lo && report.tls_angle_deg <= hi;
  }
  return report;
}

}  // namespace tlsfit

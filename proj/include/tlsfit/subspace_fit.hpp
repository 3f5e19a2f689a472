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

// Orthogonal regression (total least squares) of lines and hyperplanes.
//
// Both fits go through the centroid. The line direction is the principal axis
// of the scatter matrix with the largest eigenvalue; the hyperplane normal is
// the one with the smallest. Residuals are perpendicular distances to the
// fitted flat, so the result does not depend on which coordinate is called
// "dependent" or on the coordinate frame.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlsfit/symmetric_eigen.hpp"
#include "tlsfit/vector.hpp"

namespace tlsfit {

/// Ordered set of finite points of a common dimension, optionally labeled
/// (e.g. with years, for a phase trajectory).
class PointCloud {
 public:
  /// Throws InvalidInput when `points` is empty, dimensions disagree or are
  /// zero, a coordinate is non-finite, or `labels` is non-empty with a
  /// different length.
  explicit PointCloud(std::vector<Vector> points,
                      std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Vector>& points() const noexcept { return points_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Label of point i, or its 0-based index when the cloud is unlabeled.
  std::string LabelOf(std::size_t i) const;

 private:
  std::size_t dim_;
  std::vector<Vector> points_;
  std::vector<std::string> labels_;
};

/// Aggregate the fit error can be reported under.
enum class ErrorMetric { kSumSq, kRootSumSq, kRms, kSumAbs };

/// Metric the reported error defaults to. The reference plane errors for
/// the V4 economies are sums of absolute orthogonal distances.
inline constexpr ErrorMetric kDefaultErrorMetric = ErrorMetric::kSumAbs;

std::string_view ToString(ErrorMetric metric);
/// Accepts "sum_sq", "root_sum_sq", "rms", "sum_abs".
std::optional<ErrorMetric> ParseErrorMetric(std::string_view name);

struct ResidualStats {
  std::vector<double> per_point_distance;
  double sum_sq = 0.0;
  double sum_abs = 0.0;
  double rms = 0.0;
  double root_sum_sq = 0.0;

  double Value(ErrorMetric metric) const;
};

/// Aggregates nonnegative distances. Sums are accumulated in the order given
/// by `summation_order` (all indices, any permutation) or in index order when
/// it is empty.
ResidualStats MakeResidualStats(std::vector<double> distances,
                                std::span<const std::size_t> summation_order = {});

struct FittedLine {
  Vector anchor;     // centroid of the fitted cloud
  Vector direction;  // unit, sign-canonicalized
  ResidualStats error;
};

struct FittedHyperplane {
  Vector normal;  // unit, sign-canonicalized
  Vector centroid;
  double offset = 0.0;  // -normal . centroid
  ResidualStats error;
};

struct LabeledDistance {
  std::string label;
  double distance = 0.0;

  bool operator==(const LabeledDistance&) const = default;
};

using FittedModel = std::variant<FittedLine, FittedHyperplane>;

/// Throws NumericalFailure if the sum overflows. So do ScatterMatrix and
/// the fits.
Vector Centroid(const PointCloud& cloud);

/// Unnormalized centered second-moment matrix sum_i (p_i - c)(p_i - c)^T.
SymmetricMatrix ScatterMatrix(const PointCloud& cloud);

/// Principal axes of the cloud: eigen decomposition of its scatter matrix.
EigenDecomposition PrincipalAxes(const PointCloud& cloud);

/// Requires at least 2 points of dimension >= 2 (InvalidInput); throws
/// DegenerateGeometry when all points coincide.
FittedLine FitLine(const PointCloud& cloud);

/// Requires at least dim points of dimension >= 2 (InvalidInput); throws
/// DegenerateGeometry, carrying the flat the points lie on, when the scatter
/// has rank below dim - 1.
FittedHyperplane FitHyperplane(const PointCloud& cloud);

double DistancePointToLine(std::span<const double> p, const FittedLine& line);
double DistancePointToPlane(std::span<const double> p,
                            const FittedHyperplane& plane);

ResidualStats TotalOrthogonalError(const PointCloud& cloud,
                                   const FittedLine& line);
ResidualStats TotalOrthogonalError(const PointCloud& cloud,
                                   const FittedHyperplane& plane);
ResidualStats TotalOrthogonalError(const PointCloud& cloud,
                                   const FittedModel& model);

}  // namespace tlsfit

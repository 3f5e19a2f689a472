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

#include "tlsfit/subspace_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tlsfit/error.hpp"

namespace tlsfit {

namespace {

// An eigenvalue of the scatter matrix counts as zero when it is below either
// bound: relative to the largest eigenvalue (Jacobi noise floor) or relative
// to the squared magnitude of the raw points (cancellation when centering).
constexpr double kRelativeRankTolerance = 1e-13;
constexpr double kAbsoluteRankTolerance = 1e-24;

// Lexicographic order of the points. All sums run in this order so that
// results do not depend on how the input rows were ordered.
std::vector<std::size_t> CanonicalOrder(const PointCloud& cloud) {
  std::vector<std::size_t> order(cloud.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::lexicographical_compare(
                         cloud[a].begin(), cloud[a].end(), cloud[b].begin(),
                         cloud[b].end());
                   });
  return order;
}

Vector CentroidInOrder(const PointCloud& cloud,
                       std::span<const std::size_t> order) {
  Vector c(cloud.dim(), 0.0);
  for (std::size_t i : order) {
    for (std::size_t k = 0; k < cloud.dim(); ++k) c[k] += cloud[i][k];
  }
  for (double& x : c) x /= static_cast<double>(cloud.size());
  for (double x : c) {
    if (!std::isfinite(x)) {
      throw NumericalFailure("centroid overflowed; rescale the coordinates");
    }
  }
  return c;
}

SymmetricMatrix ScatterInOrder(const PointCloud& cloud,
                               std::span<const std::size_t> order,
                               std::span<const double> c) {
  const std::size_t d = cloud.dim();
  std::vector<double> upper(d * d, 0.0);
  Vector centered(d);
  for (std::size_t i : order) {
    for (std::size_t k = 0; k < d; ++k) centered[k] = cloud[i][k] - c[k];
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = r; s < d; ++s) {
        upper[r * d + s] += centered[r] * centered[s];
      }
    }
  }
  for (double x : upper) {
    if (!std::isfinite(x)) {
      throw NumericalFailure("scatter matrix overflowed; rescale the coordinates");
    }
  }
  SymmetricMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = r; s < d; ++s) m.Set(r, s, upper[r * d + s]);
  }
  return m;
}

double SumSquaredNorms(const PointCloud& cloud,
                       std::span<const std::size_t> order) {
  double sum = 0.0;
  for (std::size_t i : order) sum += Dot(cloud[i], cloud[i]);
  return sum;
}

// Number of eigenvalues treated as nonzero.
std::size_t NumericalRank(const EigenDecomposition& eig, double raw_scale) {
  const double largest = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues[0];
  const double tol = std::max(kRelativeRankTolerance * largest,
                              kAbsoluteRankTolerance * raw_scale);
  std::size_t rank = 0;
  for (double lambda : eig.eigenvalues) {
    if (lambda > tol) ++rank;
  }
  return rank;
}

void RequireDim(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw InvalidInput("dimension mismatch: expected " +
                       std::to_string(expected) + ", got " +
                       std::to_string(actual));
  }
}

std::string FlatName(std::size_t dim) {
  switch (dim) {
    case 0:
      return "a single point";
    case 1:
      return "a line";
    case 2:
      return "a plane";
    default:
      return "a " + std::to_string(dim) + "-dimensional flat";
  }
}

}  // namespace

PointCloud::PointCloud(std::vector<Vector> points,
                       std::vector<std::string> labels)
    : dim_(0), points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.empty()) throw InvalidInput("point cloud is empty");
  dim_ = points_.front().size();
  if (dim_ == 0) throw InvalidInput("points must have at least one coordinate");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim_) {
      throw InvalidInput("point " + std::to_string(i) + " has " +
                         std::to_string(points_[i].size()) +
                         " coordinates, expected " + std::to_string(dim_));
    }
    for (double x : points_[i]) {
      if (!std::isfinite(x)) {
        throw InvalidInput("point " + std::to_string(i) +
                           " has a non-finite coordinate");
      }
    }
  }
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw InvalidInput("label count " + std::to_string(labels_.size()) +
                       " does not match point count " +
                       std::to_string(points_.size()));
  }
}

std::string PointCloud::LabelOf(std::size_t i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::string_view ToString(ErrorMetric metric) {
  switch (metric) {
    case ErrorMetric::kSumSq:
      return "sum_sq";
    case ErrorMetric::kRootSumSq:
      return "root_sum_sq";
    case ErrorMetric::kRms:
      return "rms";
    case ErrorMetric::kSumAbs:
      return "sum_abs";
  }
  return "sum_abs";
}

std::optional<ErrorMetric> ParseErrorMetric(std::string_view name) {
  for (auto m : {ErrorMetric::kSumSq, ErrorMetric::kRootSumSq,
                 ErrorMetric::kRms, ErrorMetric::kSumAbs}) {
    if (ToString(m) == name) return m;
  }
  return std::nullopt;
}

double ResidualStats::Value(ErrorMetric metric) const {
  switch (metric) {
    case ErrorMetric::kSumSq:
      return sum_sq;
    case ErrorMetric::kRootSumSq:
      return root_sum_sq;
    case ErrorMetric::kRms:
      return rms;
    case ErrorMetric::kSumAbs:
      return sum_abs;
  }
  return sum_abs;
}

ResidualStats MakeResidualStats(std::vector<double> distances,
                                std::span<const std::size_t> summation_order) {
  if (!summation_order.empty() && summation_order.size() != distances.size()) {
    throw InvalidInput("summation order does not cover every distance");
  }
  ResidualStats out;
  auto add = [&](double d) {
    out.sum_sq += d * d;
    out.sum_abs += d;
  };
  if (summation_order.empty()) {
    for (double d : distances) add(d);
  } else {
    for (std::size_t i : summation_order) add(distances[i]);
  }
  out.root_sum_sq = std::sqrt(out.sum_sq);
  out.rms = distances.empty()
                ? 0.0
                : std::sqrt(out.sum_sq / static_cast<double>(distances.size()));
  out.per_point_distance = std::move(distances);
  return out;
}

Vector Centroid(const PointCloud& cloud) {
  return CentroidInOrder(cloud, CanonicalOrder(cloud));
}

SymmetricMatrix ScatterMatrix(const PointCloud& cloud) {
  const auto order = CanonicalOrder(cloud);
  return ScatterInOrder(cloud, order, CentroidInOrder(cloud, order));
}

EigenDecomposition PrincipalAxes(const PointCloud& cloud) {
  return EigenSymmetric(ScatterMatrix(cloud));
}

FittedLine FitLine(const PointCloud& cloud) {
  if (cloud.size() < 2) throw InvalidInput("line fit needs at least 2 points");
  if (cloud.dim() < 2) throw InvalidInput("line fit needs dimension >= 2");

  const auto order = CanonicalOrder(cloud);
  Vector c = CentroidInOrder(cloud, order);
  const auto eig = EigenSymmetric(ScatterInOrder(cloud, order, c));
  if (NumericalRank(eig, SumSquaredNorms(cloud, order)) == 0) {
    throw DegenerateGeometry("all points coincide; no line direction exists",
                             c, {});
  }

  FittedLine line{std::move(c), eig.eigenvectors.front(), {}};
  std::vector<double> d(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    d[i] = DistancePointToLine(cloud[i], line);
  }
  line.error = MakeResidualStats(std::move(d), order);
  return line;
}

FittedHyperplane FitHyperplane(const PointCloud& cloud) {
  const std::size_t dim = cloud.dim();
  if (dim < 2) throw InvalidInput("hyperplane fit needs dimension >= 2");
  if (cloud.size() < dim) {
    throw InvalidInput("hyperplane fit in dimension " + std::to_string(dim) +
                       " needs at least " + std::to_string(dim) +
                       " points, got " + std::to_string(cloud.size()));
  }

  const auto order = CanonicalOrder(cloud);
  Vector c = CentroidInOrder(cloud, order);
  const auto eig = EigenSymmetric(ScatterInOrder(cloud, order, c));
  const std::size_t rank = NumericalRank(eig, SumSquaredNorms(cloud, order));
  if (rank + 1 < dim) {
    std::vector<Vector> basis(eig.eigenvectors.begin(),
                              eig.eigenvectors.begin() + rank);
    throw DegenerateGeometry("points lie on " + FlatName(rank) +
                                 "; the fitting hyperplane is not unique",
                             std::move(c), std::move(basis));
  }

  FittedHyperplane plane;
  plane.normal = eig.eigenvectors.back();
  plane.offset = -Dot(plane.normal, c);
  plane.centroid = std::move(c);
  std::vector<double> d(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    d[i] = DistancePointToPlane(cloud[i], plane);
  }
  plane.error = MakeResidualStats(std::move(d), order);
  return plane;
}

double DistancePointToLine(std::span<const double> p, const FittedLine& line) {
  RequireDim(line.anchor.size(), p.size());
  const Vector r = Subtract(p, line.anchor);
  const Vector perp = AddScaled(r, -Dot(r, line.direction), line.direction);
  return Norm(perp);
}

// |n . p + offset| evaluated as |n . (p - centroid)|, which is the same
// quantity with less cancellation far from the origin.
double DistancePointToPlane(std::span<const double> p,
                            const FittedHyperplane& plane) {
  RequireDim(plane.normal.size(), p.size());
  return std::abs(Dot(plane.normal, Subtract(p, plane.centroid)));
}

ResidualStats TotalOrthogonalError(const PointCloud& cloud,
                                   const FittedLine& line) {
  RequireDim(line.anchor.size(), cloud.dim());
  std::vector<double> d(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    d[i] = DistancePointToLine(cloud[i], line);
  }
  return MakeResidualStats(std::move(d), CanonicalOrder(cloud));
}

ResidualStats TotalOrthogonalError(const PointCloud& cloud,
                                   const FittedHyperplane& plane) {
  RequireDim(plane.normal.size(), cloud.dim());
  std::vector<double> d(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    d[i] = DistancePointToPlane(cloud[i], plane);
  }
  return MakeResidualStats(std::move(d), CanonicalOrder(cloud));
}

ResidualStats TotalOrthogonalError(const PointCloud& cloud,
                                   const FittedModel& model) {
  return std::visit(
      [&](const auto& m) { return TotalOrthogonalError(cloud, m); }, model);
}

}  // namespace tlsfit

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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "tlsfit/error.hpp"

namespace tlsfit::economy {
namespace {

using tlsfit::testing::UpToSignDistance;

struct Reference {
  const char* code;
  Vector normal;
  Vector centroid;
  double err;
};

// Reference plane results. The HU centroid and error are not reproducible from
// the HU indicator rows and are checked separately.
const Reference kReference[] = {
    {"SK", {0.6704, 0.7195, -0.1811}, {13.8714, 4.5571, 9.1429}, 4.2633},
    {"PL", {-0.4083, -0.9059, 0.1123}, {13.1143, 5.5571, 17.8143}, 4.3106},
    {"CZ", {0.7632, 0.4525, 0.4612}, {5.7714, 1.8429, 7.6143}, 4.6111},
};

double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

TEST(V4DatasetTest, ShapeAndSpotValues) {
  const auto& data = V4Dataset();
  ASSERT_EQ(data.size(), 4u);
  EXPECT_EQ(data[0].country, "SK");
  EXPECT_EQ(data[1].country, "PL");
  EXPECT_EQ(data[2].country, "CZ");
  EXPECT_EQ(data[3].country, "HU");
  for (const auto& s : data) {
    EXPECT_EQ(s.years, (std::vector<int>{1994, 1995, 1996, 1997, 1998, 1999, 2000}));
    EXPECT_NO_THROW(s.Validate());
  }
  EXPECT_EQ(ValueAt(FindSeries(data, "CZ"), "gdp_change", 1997), -0.1);
  EXPECT_EQ(ValueAt(FindSeries(data, "HU"), "inflation", 1996), 23.6);
  EXPECT_EQ(ValueAt(FindSeries(data, "PL"), "inflation", 1994), 33.2);
  EXPECT_EQ(ValueAt(FindSeries(data, "SK"), "unemployment", 2000), 18.5);
  EXPECT_THROW(FindSeries(data, "AT"), InvalidInput);
  EXPECT_THROW(ValueAt(data[0], "inflation", 2001), InvalidInput);
  EXPECT_THROW(ValueAt(data[0], "wages", 1994), InvalidInput);
}

TEST(IndicatorSeriesTest, Validate) {
  IndicatorSeries s{"X", {2000, 2001}, {1, 2}, {3, 4}, {5}};
  EXPECT_THROW(s.Validate(), InvalidInput);
  s.inflation = {5, 6};
  EXPECT_NO_THROW(s.Validate());
  s.years = {2001, 2001};
  EXPECT_THROW(s.Validate(), InvalidInput);
}

TEST(TrajectoryTest, PointsAndLabels) {
  const auto cloud = Trajectory(FindSeries(V4Dataset(), "SK"));
  ASSERT_EQ(cloud.size(), 7u);
  EXPECT_EQ(cloud.dim(), 3u);
  EXPECT_EQ(cloud[0], (Vector{13.7, 4.8, 13.4}));
  EXPECT_EQ(cloud[6], (Vector{18.5, 2.0, 11.5}));
  EXPECT_EQ(cloud.LabelOf(0), "1994");
  EXPECT_EQ(cloud.LabelOf(6), "2000");
}

TEST(FitEconomyPlaneTest, MatchesReferenceRows) {
  for (const auto& row : kReference) {
    SCOPED_TRACE(row.code);
    const auto p = FitEconomyPlane(FindSeries(V4Dataset(), row.code));
    EXPECT_EQ(p.country, row.code);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_NEAR(p.plane.centroid[k], row.centroid[k], 1e-4);
    }
    EXPECT_LE(UpToSignDistance(p.plane.normal, row.normal), 1e-3);
    EXPECT_EQ(p.metric, ErrorMetric::kSumAbs);
    EXPECT_NEAR(p.err_reported, row.err, 1e-2);
    ASSERT_EQ(p.yearly_distances.size(), 7u);
    EXPECT_EQ(p.yearly_distances[0].label, "1994");
  }
}

TEST(FitEconomyPlaneTest, HungaryCentroidFollowsTheIndicatorRows) {
  const auto& hu = FindSeries(V4Dataset(), "HU");
  const auto p = FitEconomyPlane(hu);
  EXPECT_NEAR(p.plane.centroid[0], Mean(hu.unemployment), 1e-12);
  EXPECT_NEAR(p.plane.centroid[0], 8.3714, 1e-4);
  EXPECT_NEAR(p.plane.centroid[1], 3.6143, 1e-4);
  EXPECT_NEAR(p.plane.centroid[2], 17.5, 1e-4);
}

// A single changed cell (1996 inflation 13.6 instead of 23.6) reproduces the
// whole HU reference row, which pins down where the inconsistency lies.
TEST(FitEconomyPlaneTest, HungaryReferenceRowMatchesOneCorrectedCell) {
  IndicatorSeries hu = FindSeries(V4Dataset(), "HU");
  hu.inflation[2] = 13.6;
  const auto p = FitEconomyPlane(hu);
  EXPECT_NEAR(p.plane.centroid[2], 16.0714, 1e-4);
  EXPECT_LE(UpToSignDistance(p.plane.normal, Vector{0.7362, 0.6745, -0.0545}), 1e-3);
  EXPECT_NEAR(p.err_reported, 3.7431, 1e-3);
}

TEST(FitEconomyPlaneTest, Errors) {
  IndicatorSeries s{"X", {2000, 2001}, {1, 2}, {3, 4}, {5, 6}};
  EXPECT_THROW(FitEconomyPlane(s), InvalidInput);
  IndicatorSeries flat{"Y", {2000, 2001, 2002}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
  EXPECT_THROW(FitEconomyPlane(flat), DegenerateGeometry);
}

TEST(PlaneAngleTest, ReferenceNormals) {
  const double sk_hu = PlaneAngleDeg(Vector{0.6704, 0.7195, -0.1811},
                                     Vector{0.7362, 0.6745, -0.0545});
  // Independent: normalize, then arccos of |dot|.
  const Vector a = {0.6704, 0.7195, -0.1811}, b = {0.7362, 0.6745, -0.0545};
  const double cos_ab = std::abs(Dot(a, b)) / (Norm(a) * Norm(b));
  EXPECT_NEAR(sk_hu, std::acos(cos_ab) * 180.0 / std::numbers::pi, 1e-12);
  EXPECT_NEAR(sk_hu, 8.580230523065422, 1e-9);

  EXPECT_NEAR(PlaneAngleDeg(Vector{0, 0, 1}, Vector{0, 0, -1}), 0.0, 1e-12);
  EXPECT_NEAR(PlaneAngleDeg(Vector{1, 0, 0}, Vector{0, 1, 0}), 90.0, 1e-12);
}

TEST(PlaneSlopesTest, SlovakSlopes) {
  EconomyPlane p;
  p.plane.normal = {0.6704, 0.7195, -0.1811};
  const double len = Norm(p.plane.normal);
  const auto slopes = PlaneSlopesDeg(p);
  auto deg = [](double c) { return std::acos(c) * 180.0 / std::numbers::pi; };
  // The gdp-inflation plane has normal e_unemployment, and so on.
  EXPECT_NEAR(slopes[2], deg(0.6704 / len), 1e-9);
  EXPECT_NEAR(slopes[1], deg(0.7195 / len), 1e-9);
  EXPECT_NEAR(slopes[0], deg(0.1811 / len), 1e-9);

  // The fitted SK plane agrees with the reference normal to its 4
  // decimals: arccos(0.6704) = 47.902055...
  const auto fitted = PlaneSlopesDeg(FitEconomyPlane(FindSeries(V4Dataset(), "SK")));
  EXPECT_NEAR(fitted[2], 47.902055497216, 5e-3);
}

TEST(ComputeIndicatorsTest, MatrixShape) {
  const auto ind = ComputeIndicators(V4Dataset());
  ASSERT_EQ(ind.planes.size(), 4u);
  ASSERT_EQ(ind.pairwise_angles_deg.size(), 4u);
  ASSERT_EQ(ind.slopes_deg.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(ind.pairwise_angles_deg[i][i], 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(ind.pairwise_angles_deg[i][j], ind.pairwise_angles_deg[j][i]);
      EXPECT_GE(ind.pairwise_angles_deg[i][j], 0.0);
      EXPECT_LE(ind.pairwise_angles_deg[i][j], 90.0);
    }
  }
}

TEST(EconomyProperty, RowOrderIsBitwiseIrrelevant) {
  std::mt19937_64 rng(21);
  for (const auto& original : V4Dataset()) {
    const auto ref = FitEconomyPlane(original);
    for (int c = 0; c < 50; ++c) {
      std::vector<std::size_t> order = {0, 1, 2, 3, 4, 5, 6};
      std::shuffle(order.begin(), order.end(), rng);
      IndicatorSeries s{original.country, {}, {}, {}, {}};
      // Years must stay increasing, so relabel while permuting the rows.
      for (std::size_t k = 0; k < 7; ++k) {
        s.years.push_back(3000 + static_cast<int>(k));
        s.unemployment.push_back(original.unemployment[order[k]]);
        s.gdp_change.push_back(original.gdp_change[order[k]]);
        s.inflation.push_back(original.inflation[order[k]]);
      }
      const auto p = FitEconomyPlane(s);
      EXPECT_EQ(p.plane.normal, ref.plane.normal);
      EXPECT_EQ(p.plane.centroid, ref.plane.centroid);
      EXPECT_EQ(p.err_reported, ref.err_reported);
    }
  }
}

TEST(EconomyProperty, TranslationMovesCentroidOnly) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> shift(-20.0, 20.0);
  for (int c = 0; c < 200; ++c) {
    const auto& original = V4Dataset()[static_cast<std::size_t>(c) % 4];
    const double du = shift(rng), dg = shift(rng), di = shift(rng);
    IndicatorSeries s = original;
    for (double& x : s.unemployment) x += du;
    for (double& x : s.gdp_change) x += dg;
    for (double& x : s.inflation) x += di;
    const auto a = FitEconomyPlane(original);
    const auto b = FitEconomyPlane(s);
    EXPECT_LE(UpToSignDistance(a.plane.normal, b.plane.normal), 1e-9);
    EXPECT_NEAR(b.plane.centroid[0], a.plane.centroid[0] + du, 1e-9);
    EXPECT_NEAR(b.plane.centroid[1], a.plane.centroid[1] + dg, 1e-9);
    EXPECT_NEAR(b.plane.centroid[2], a.plane.centroid[2] + di, 1e-9);
    EXPECT_NEAR(b.err_reported, a.err_reported, 1e-9);
  }
}

}  // namespace
}  // namespace tlsfit::economy

//
// Copyright 2026 The Geopriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "geopriv/geo.h"

#include <cmath>
#include <numbers>
#include <random>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace geopriv {
namespace {

using ::testing::HasSubstr;

ProjectionRef RefAt(double lat, double lon) {
  return *ProjectionRef::Create(GeoPoint{lat, lon});
}

Grid TenByTen() { return *Grid::Create(PlanarPoint{0, 0}, 100.0, 10, 10); }

TEST(ProjectTest, OriginMapsToZero) {
  const ProjectionRef ref = RefAt(37.7, -122.4);
  const PlanarPoint p = *Project(GeoPoint{37.7, -122.4}, ref);
  EXPECT_EQ(p.x, 0.0);
  EXPECT_EQ(p.y, 0.0);
}

TEST(ProjectTest, HundredthOfADegreeNorth) {
  const PlanarPoint p = *Project(GeoPoint{0.01, 0.0}, RefAt(0, 0));
  EXPECT_NEAR(p.x, 0.0, 1e-9);
  EXPECT_NEAR(p.y, 1111.949, 0.001);
}

TEST(ProjectTest, HundredthOfADegreeEastAtSixty) {
  const PlanarPoint p = *Project(GeoPoint{60.0, 0.01}, RefAt(60, 0));
  EXPECT_NEAR(p.x, 555.97, 0.01);
  EXPECT_NEAR(p.y, 0.0, 1e-9);
}

TEST(ProjectTest, RejectsPointsOutsideWindow) {
  const auto p = Project(GeoPoint{43.0, 0.0}, RefAt(38, 0));
  EXPECT_EQ(p.status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_THAT(p.status().message(), HasSubstr("OutOfProjectionWindow"));
  EXPECT_TRUE(Project(GeoPoint{42.99, 0.0}, RefAt(38, 0)).ok());
}

TEST(ProjectTest, RejectsInvalidInputs) {
  EXPECT_FALSE(ProjectionRef::Create(GeoPoint{91, 0}).ok());
  EXPECT_FALSE(ProjectionRef::Create(GeoPoint{0, 0}, 0.0).ok());
  EXPECT_FALSE(Project(GeoPoint{NAN, 0}, RefAt(0, 0)).ok());
}

TEST(ProjectTest, UnprojectInvertsProject) {
  const ProjectionRef ref = RefAt(37.7, -122.4);
  const GeoPoint g{37.75, -122.33};
  const GeoPoint back = Unproject(*Project(g, ref), ref);
  EXPECT_NEAR(back.lat, g.lat, 1e-12);
  EXPECT_NEAR(back.lon, g.lon, 1e-12);
}

// Haversine great-circle distance, for the local isometry check.
double GreatCircle(const GeoPoint& a, const GeoPoint& b) {
  constexpr double k = std::numbers::pi / 180.0;
  const double dlat = (b.lat - a.lat) * k;
  const double dlon = (b.lon - a.lon) * k;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.lat * k) * std::cos(b.lat * k) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusMeters * std::asin(std::sqrt(h));
}

TEST(ProjectTest, LocallyIsometricNearEquator) {
  const ProjectionRef ref = RefAt(0, 0);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> off(-0.0063, 0.0063);  // ~700 m
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint a{off(gen), off(gen)};
    const GeoPoint b{off(gen), off(gen)};
    const double gc = GreatCircle(a, b);
    if (gc < 1.0) continue;
    const double planar = Distance(*Project(a, ref), *Project(b, ref));
    EXPECT_NEAR(planar / gc, 1.0, 1e-3);
  }
}

TEST(DistanceTest, Examples) {
  EXPECT_EQ(Distance({0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(Distance({0, 0}, {3, 4}), 5.0);
  EXPECT_EQ(Distance({100, 200}, {400, 600}), 500.0);
}

TEST(DistanceTest, MetricAxiomsOnRandomPoints) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1e4, 1e4);
  for (int i = 0; i < 10000; ++i) {
    const PlanarPoint a{u(gen), u(gen)}, b{u(gen), u(gen)}, c{u(gen), u(gen)};
    EXPECT_EQ(Distance(a, b), Distance(b, a));
    EXPECT_LE(Distance(a, c), Distance(a, b) + Distance(b, c) + 1e-9);
    EXPECT_GT(Distance(a, b), 0.0);
  }
}

TEST(GridTest, LocateExamples) {
  const Grid g = TenByTen();
  EXPECT_EQ(*g.Locate({50, 50}), 0);
  EXPECT_EQ(*g.Locate({100, 0}), 1);
  EXPECT_EQ(*g.Locate({999.9, 999.9}), 99);
  EXPECT_EQ(*g.Locate({0, 100}), 10);
}

TEST(GridTest, LocateOutsideFails) {
  const Grid g = TenByTen();
  for (const PlanarPoint p : {PlanarPoint{-0.1, 5}, PlanarPoint{1000, 5},
                              PlanarPoint{5, 1000}, PlanarPoint{NAN, 5}}) {
    const auto r = g.Locate(p);
    EXPECT_EQ(r.status().code(), absl::StatusCode::kOutOfRange);
    EXPECT_THAT(r.status().message(), HasSubstr("OutOfGrid"));
  }
}

TEST(GridTest, CellCenterExamples) {
  const Grid g = TenByTen();
  EXPECT_EQ(*g.CellCenter(0), (PlanarPoint{50, 50}));
  EXPECT_EQ(*g.CellCenter(1), (PlanarPoint{150, 50}));
  EXPECT_EQ(*g.CellCenter(10), (PlanarPoint{50, 150}));
  EXPECT_THAT(g.CellCenter(100).status().message(), HasSubstr("IndexOutOfRange"));
  EXPECT_FALSE(g.CellCenter(-1).ok());
}

TEST(GridTest, CenterRoundTripsThroughLocate) {
  const Grid g = *Grid::Create(PlanarPoint{-12345.6, 789.1}, 37.5, 53, 29);
  for (int64_t k = 0; k < g.num_cells(); ++k) {
    EXPECT_EQ(*g.Locate(*g.CellCenter(k)), k);
  }
}

TEST(GridTest, RejectsBadShapes) {
  EXPECT_FALSE(Grid::Create({0, 0}, 0.0, 1, 1).ok());
  EXPECT_FALSE(Grid::Create({0, 0}, 1.0, 0, 1).ok());
  EXPECT_FALSE(Grid::Create({0, 0}, 1.0, 1, -3).ok());
}

}  // namespace
}  // namespace geopriv

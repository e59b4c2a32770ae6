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

#ifndef GEOPRIV_GEO_H_
#define GEOPRIV_GEO_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace geopriv {

// Mean Earth radius used by the local projection.
inline constexpr double kEarthRadiusMeters = 6371000.0;

// Maximum latitude offset from the projection origin accepted by Project().
inline constexpr double kProjectionWindowDegrees = 5.0;

// A geographic coordinate in degrees.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  bool IsValid() const;
};

// A location in a local flat metric: meters east (x) and north (y) of a
// projection origin.
struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

// Euclidean distance in meters.
double Distance(const PlanarPoint& a, const PlanarPoint& b);

// Origin of an equirectangular projection.
class ProjectionRef {
 public:
  static absl::StatusOr<ProjectionRef> Create(
      GeoPoint origin, double earth_radius = kEarthRadiusMeters);

  const GeoPoint& origin() const { return origin_; }
  double earth_radius() const { return earth_radius_; }

 private:
  ProjectionRef(GeoPoint origin, double earth_radius)
      : origin_(origin), earth_radius_(earth_radius) {}

  GeoPoint origin_;
  double earth_radius_;
};

// Equirectangular projection about `ref.origin()`. Fails with
// OutOfRange ("OutOfProjectionWindow") when the latitude differs from the
// origin by 5 degrees or more.
absl::StatusOr<PlanarPoint> Project(const GeoPoint& g, const ProjectionRef& ref);

// Inverse of Project(). No window check.
GeoPoint Unproject(const PlanarPoint& p, const ProjectionRef& ref);

// Uniform grid of square cells. Cell k sits at column k % nx, row k / nx.
// Cells are half-open: [lo, hi) on both axes.
class Grid {
 public:
  static absl::StatusOr<Grid> Create(PlanarPoint origin, double cell_size,
                                     int64_t nx, int64_t ny);

  const PlanarPoint& origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  int64_t nx() const { return nx_; }
  int64_t ny() const { return ny_; }
  int64_t num_cells() const { return nx_ * ny_; }

  // Cell containing `p`; OutOfRange ("OutOfGrid") outside the bounding box.
  absl::StatusOr<int64_t> Locate(const PlanarPoint& p) const;

  // Center of cell `index`; OutOfRange ("IndexOutOfRange") if invalid.
  absl::StatusOr<PlanarPoint> CellCenter(int64_t index) const;

  // Unchecked variant for hot loops; `index` must be < num_cells().
  PlanarPoint CenterOf(int64_t index) const;

 private:
  Grid(PlanarPoint origin, double cell_size, int64_t nx, int64_t ny)
      : origin_(origin), cell_size_(cell_size), nx_(nx), ny_(ny) {}

  PlanarPoint origin_;
  double cell_size_;
  int64_t nx_;
  int64_t ny_;
};

}  // namespace geopriv

#endif  // GEOPRIV_GEO_H_

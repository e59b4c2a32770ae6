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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace geopriv {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

bool GeoPoint::IsValid() const {
  return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 &&
         lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

double Distance(const PlanarPoint& a, const PlanarPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

absl::StatusOr<ProjectionRef> ProjectionRef::Create(GeoPoint origin,
                                                    double earth_radius) {
  if (!origin.IsValid()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "projection origin out of range: (", origin.lat, ", ", origin.lon, ")"));
  }
  if (!(earth_radius > 0.0) || !std::isfinite(earth_radius)) {
    return absl::InvalidArgumentError("earth radius must be positive");
  }
  return ProjectionRef(origin, earth_radius);
}

absl::StatusOr<PlanarPoint> Project(const GeoPoint& g,
                                    const ProjectionRef& ref) {
  if (!g.IsValid()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid GeoPoint (", g.lat, ", ", g.lon, ")"));
  }
  const GeoPoint& o = ref.origin();
  if (!(std::abs(g.lat - o.lat) < kProjectionWindowDegrees)) {
    return absl::OutOfRangeError(absl::StrCat(
        "OutOfProjectionWindow: latitude ", g.lat, " is not within ",
        kProjectionWindowDegrees, " degrees of origin ", o.lat));
  }
  const double scale = ref.earth_radius() * kDegToRad;
  return PlanarPoint{(g.lon - o.lon) * std::cos(o.lat * kDegToRad) * scale,
                     (g.lat - o.lat) * scale};
}

GeoPoint Unproject(const PlanarPoint& p, const ProjectionRef& ref) {
  const GeoPoint& o = ref.origin();
  const double scale = ref.earth_radius() * kDegToRad;
  return GeoPoint{o.lat + p.y / scale,
                  o.lon + p.x / (scale * std::cos(o.lat * kDegToRad))};
}

absl::StatusOr<Grid> Grid::Create(PlanarPoint origin, double cell_size,
                                  int64_t nx, int64_t ny) {
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) {
    return absl::InvalidArgumentError("grid origin must be finite");
  }
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    return absl::InvalidArgumentError("grid cell size must be positive");
  }
  if (nx <= 0 || ny <= 0) {
    return absl::InvalidArgumentError("grid cell counts must be positive");
  }
  return Grid(origin, cell_size, nx, ny);
}

absl::StatusOr<int64_t> Grid::Locate(const PlanarPoint& p) const {
  const double fx = (p.x - origin_.x) / cell_size_;
  const double fy = (p.y - origin_.y) / cell_size_;
  if (!(fx >= 0.0 && fy >= 0.0 && fx < static_cast<double>(nx_) &&
        fy < static_cast<double>(ny_))) {
    return absl::OutOfRangeError(
        absl::StrCat("OutOfGrid: (", p.x, ", ", p.y, ")"));
  }
  // Guard against rounding pushing a point just below an upper edge into the
  // next (nonexistent) column.
  const int64_t i = std::min<int64_t>(static_cast<int64_t>(fx), nx_ - 1);
  const int64_t j = std::min<int64_t>(static_cast<int64_t>(fy), ny_ - 1);
  return j * nx_ + i;
}

absl::StatusOr<PlanarPoint> Grid::CellCenter(int64_t index) const {
  if (index < 0 || index >= num_cells()) {
    return absl::OutOfRangeError(
        absl::StrCat("IndexOutOfRange: cell ", index, " of ", num_cells()));
  }
  return CenterOf(index);
}

PlanarPoint Grid::CenterOf(int64_t index) const {
  const int64_t i = index % nx_;
  const int64_t j = index / nx_;
  return PlanarPoint{origin_.x + (static_cast<double>(i) + 0.5) * cell_size_,
                     origin_.y + (static_cast<double>(j) + 0.5) * cell_size_};
}

}  // namespace geopriv

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

#ifndef GEOPRIV_DATASET_H_
#define GEOPRIV_DATASET_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "geopriv/geo.h"
#include "geopriv/pmf.h"

namespace geopriv {

// One record of the SNAP Gowalla check-in file.
struct Checkin {
  int64_t user_id = 0;
  int64_t timestamp = 0;  // seconds since the Unix epoch, UTC
  GeoPoint location;
  int64_t venue_id = 0;
};

// Latitude/longitude bounding box; min < max on both axes.
struct Region {
  double min_lat = 0.0;
  double max_lat = 0.0;
  double min_lon = 0.0;
  double max_lon = 0.0;

  static absl::StatusOr<Region> Create(double min_lat, double max_lat,
                                       double min_lon, double max_lon);
  // 37.55..37.85 N, -122.55..-122.25 E.
  static Region SanFrancisco();

  bool Contains(const GeoPoint& g) const;
  GeoPoint Center() const;
};

struct LoadStats {
  int64_t parsed = 0;
  int64_t malformed = 0;
  int64_t outside_region = 0;
};

struct CheckinLoad {
  std::vector<Checkin> checkins;
  LoadStats stats;
};

// Parses "user<TAB>YYYY-MM-DDTHH:MM:SSZ<TAB>lat<TAB>lon<TAB>venue".
absl::StatusOr<Checkin> ParseCheckinLine(std::string_view line);

// Streams a check-in file and keeps the records inside `region`, in file
// order. Malformed lines are counted, not fatal. Unavailable ("IoError") if
// the file cannot be read.
absl::StatusOr<CheckinLoad> LoadCheckins(const std::string& path,
                                         const Region& region);

struct SplitSpec {
  double train_fraction = 0.8;
  uint64_t seed = 42;
};

struct UserSplit {
  std::vector<Checkin> train;
  std::vector<Checkin> test;
  int64_t train_users = 0;
  int64_t test_users = 0;
};

// Shuffles the distinct users with `spec.seed` and gives the first
// ceil(train_fraction * U) of them to train. Check-ins keep input order.
absl::StatusOr<UserSplit> SplitUsers(std::span<const Checkin> checkins,
                                     const SplitSpec& spec);

// Projection centered on the region and a grid covering its bounding box.
absl::StatusOr<ProjectionRef> RegionProjection(const Region& region);
absl::StatusOr<Grid> RegionGrid(const Region& region, const ProjectionRef& ref,
                                double cell_size_m);

struct PriorOptions {
  // Pseudo-count added to every grid cell. 0 keeps raw frequencies.
  double smoothing = 0.0;
};

// Frequency of train check-ins per grid cell. Atoms carry the cell index and
// center; only cells with positive mass are listed. Check-ins outside the
// grid are ignored. FailedPrecondition ("EmptyPrior") if none fall inside.
absl::StatusOr<Pmf> EmpiricalPrior(std::span<const Checkin> train,
                                   const Grid& grid, const ProjectionRef& ref,
                                   const PriorOptions& options = {});

// A prior together with the grid and projection it was built on.
struct GridPrior {
  ProjectionRef projection;
  Grid grid;
  Pmf prior;
};

// Writes "cell_index,mass" rows to `csv_path` and the grid/projection to
// `csv_path + ".json"`.
absl::Status WriteGridPrior(const GridPrior& prior, const std::string& csv_path);
absl::StatusOr<GridPrior> ReadGridPrior(const std::string& csv_path);

}  // namespace geopriv

#endif  // GEOPRIV_DATASET_H_

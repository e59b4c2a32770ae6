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

#include "geopriv/dataset.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "geopriv/io_util.h"
#include "geopriv/random.h"
#include "nlohmann/json.hpp"

namespace geopriv {

namespace {

using json = nlohmann::json;

absl::StatusOr<int64_t> ParseIsoTimestamp(std::string_view s) {
  // YYYY-MM-DDTHH:MM:SSZ
  if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' ||
      s[13] != ':' || s[16] != ':' || s[19] != 'Z') {
    return absl::InvalidArgumentError(absl::StrCat("bad timestamp '", std::string(s), "'"));
  }
  auto num = [&](size_t pos, size_t len) -> absl::StatusOr<int64_t> {
    return ParseInt64(s.substr(pos, len));
  };
  absl::StatusOr<int64_t> y = num(0, 4), mo = num(5, 2), d = num(8, 2),
                          h = num(11, 2), mi = num(14, 2), sec = num(17, 2);
  for (const auto* v : {&y, &mo, &d, &h, &mi, &sec}) {
    if (!v->ok()) return v->status();
  }
  const std::chrono::year_month_day ymd{
      std::chrono::year(static_cast<int>(*y)),
      std::chrono::month(static_cast<unsigned>(*mo)),
      std::chrono::day(static_cast<unsigned>(*d))};
  if (!ymd.ok() || *h > 23 || *mi > 59 || *sec > 60) {
    return absl::InvalidArgumentError(absl::StrCat("bad timestamp '", std::string(s), "'"));
  }
  const auto days = std::chrono::sys_days(ymd).time_since_epoch().count();
  return static_cast<int64_t>(days) * 86400 + *h * 3600 + *mi * 60 + *sec;
}

}  // namespace

absl::StatusOr<Region> Region::Create(double min_lat, double max_lat,
                                      double min_lon, double max_lon) {
  Region r{min_lat, max_lat, min_lon, max_lon};
  if (!GeoPoint{min_lat, min_lon}.IsValid() ||
      !GeoPoint{max_lat, max_lon}.IsValid() || !(min_lat < max_lat) ||
      !(min_lon < max_lon)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "invalid region lat [", min_lat, ", ", max_lat, "] lon [", min_lon,
        ", ", max_lon, "]"));
  }
  return r;
}

Region Region::SanFrancisco() { return Region{37.55, 37.85, -122.55, -122.25}; }

bool Region::Contains(const GeoPoint& g) const {
  return g.lat >= min_lat && g.lat <= max_lat && g.lon >= min_lon &&
         g.lon <= max_lon;
}

GeoPoint Region::Center() const {
  return GeoPoint{0.5 * (min_lat + max_lat), 0.5 * (min_lon + max_lon)};
}

absl::StatusOr<Checkin> ParseCheckinLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const std::vector<std::string_view> f = SplitFields(line, '\t');
  if (f.size() != 5) {
    return absl::InvalidArgumentError(
        absl::StrCat("MalformedLine: expected 5 fields, got ", f.size()));
  }
  absl::StatusOr<int64_t> user = ParseInt64(f[0]);
  absl::StatusOr<int64_t> ts = ParseIsoTimestamp(f[1]);
  absl::StatusOr<double> lat = ParseDouble(f[2]);
  absl::StatusOr<double> lon = ParseDouble(f[3]);
  absl::StatusOr<int64_t> venue = ParseInt64(f[4]);
  for (const absl::Status& s : {user.status(), ts.status(), lat.status(),
                                lon.status(), venue.status()}) {
    if (!s.ok()) {
      return absl::InvalidArgumentError(absl::StrCat("MalformedLine: ", s.message()));
    }
  }
  Checkin c{*user, *ts, GeoPoint{*lat, *lon}, *venue};
  if (!c.location.IsValid()) {
    return absl::InvalidArgumentError("MalformedLine: coordinates out of range");
  }
  return c;
}

absl::StatusOr<CheckinLoad> LoadCheckins(const std::string& path,
                                         const Region& region) {
  std::ifstream in(path);
  if (!in) {
    return absl::UnavailableError(absl::StrCat("IoError: cannot open ", path));
  }
  CheckinLoad load;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    absl::StatusOr<Checkin> c = ParseCheckinLine(line);
    if (!c.ok()) {
      ++load.stats.malformed;
      continue;
    }
    ++load.stats.parsed;
    if (!region.Contains(c->location)) {
      ++load.stats.outside_region;
      continue;
    }
    load.checkins.push_back(*c);
  }
  if (in.bad()) {
    return absl::UnavailableError(absl::StrCat("IoError: read failed ", path));
  }
  return load;
}

absl::StatusOr<UserSplit> SplitUsers(std::span<const Checkin> checkins,
                                     const SplitSpec& spec) {
  if (checkins.empty()) {
    return absl::InvalidArgumentError("cannot split an empty check-in list");
  }
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    return absl::InvalidArgumentError("train_fraction must be in (0, 1)");
  }
  std::vector<int64_t> users;
  users.reserve(checkins.size());
  for (const Checkin& c : checkins) users.push_back(c.user_id);
  std::sort(users.begin(), users.end());
  users.erase(std::unique(users.begin(), users.end()), users.end());

  // Fisher-Yates on our own stream so the permutation is identical across
  // standard library implementations.
  RandomStream rnd(spec.seed, 0);
  for (size_t i = users.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rnd.UniformIndex(i));
    std::swap(users[i - 1], users[j]);
  }

  const size_t n_train = static_cast<size_t>(
      std::ceil(spec.train_fraction * static_cast<double>(users.size())));
  std::vector<int64_t> train_users(users.begin(), users.begin() + n_train);
  std::sort(train_users.begin(), train_users.end());

  UserSplit split;
  split.train_users = static_cast<int64_t>(n_train);
  split.test_users = static_cast<int64_t>(users.size() - n_train);
  for (const Checkin& c : checkins) {
    if (std::binary_search(train_users.begin(), train_users.end(), c.user_id)) {
      split.train.push_back(c);
    } else {
      split.test.push_back(c);
    }
  }
  return split;
}

absl::StatusOr<ProjectionRef> RegionProjection(const Region& region) {
  return ProjectionRef::Create(region.Center());
}

absl::StatusOr<Grid> RegionGrid(const Region& region, const ProjectionRef& ref,
                                double cell_size_m) {
  absl::StatusOr<PlanarPoint> sw =
      Project(GeoPoint{region.min_lat, region.min_lon}, ref);
  absl::StatusOr<PlanarPoint> ne =
      Project(GeoPoint{region.max_lat, region.max_lon}, ref);
  if (!sw.ok()) return sw.status();
  if (!ne.ok()) return ne.status();
  if (!(cell_size_m > 0.0)) {
    return absl::InvalidArgumentError("cell size must be positive");
  }
  const auto nx = static_cast<int64_t>(std::ceil((ne->x - sw->x) / cell_size_m));
  const auto ny = static_cast<int64_t>(std::ceil((ne->y - sw->y) / cell_size_m));
  // One extra cell keeps the region's north/east edges inside the half-open
  // grid.
  return Grid::Create(*sw, cell_size_m, nx + 1, ny + 1);
}

absl::StatusOr<Pmf> EmpiricalPrior(std::span<const Checkin> train,
                                   const Grid& grid, const ProjectionRef& ref,
                                   const PriorOptions& options) {
  if (!(options.smoothing >= 0.0)) {
    return absl::InvalidArgumentError("smoothing must be >= 0");
  }
  std::map<int64_t, double> counts;
  int64_t in_grid = 0;
  for (const Checkin& c : train) {
    absl::StatusOr<PlanarPoint> p = Project(c.location, ref);
    if (!p.ok()) continue;
    absl::StatusOr<int64_t> cell = grid.Locate(*p);
    if (!cell.ok()) continue;
    counts[*cell] += 1.0;
    ++in_grid;
  }
  if (in_grid == 0) {
    return absl::FailedPreconditionError(
        "EmptyPrior: no training check-in falls inside the grid");
  }
  if (options.smoothing > 0.0) {
    for (int64_t k = 0; k < grid.num_cells(); ++k) {
      counts[k] += options.smoothing;
    }
  }
  std::vector<PmfAtom> atoms;
  atoms.reserve(counts.size());
  for (const auto& [cell, count] : counts) {
    atoms.push_back(PmfAtom{grid.CenterOf(cell), count, cell});
  }
  return Pmf::FromWeights(std::move(atoms));
}

absl::Status WriteGridPrior(const GridPrior& prior,
                            const std::string& csv_path) {
  std::string csv = "cell_index,mass\n";
  for (const PmfAtom& a : prior.prior.atoms()) {
    absl::StrAppend(&csv, a.cell, ",", FormatDouble(a.mass), "\n");
  }
  const json sidecar = {
      {"origin_lat", prior.projection.origin().lat},
      {"origin_lon", prior.projection.origin().lon},
      {"earth_radius_m", prior.projection.earth_radius()},
      {"grid_origin_x_m", prior.grid.origin().x},
      {"grid_origin_y_m", prior.grid.origin().y},
      {"cell_size_m", prior.grid.cell_size()},
      {"nx", prior.grid.nx()},
      {"ny", prior.grid.ny()},
  };
  if (auto s = WriteFileAtomic(csv_path, csv); !s.ok()) return s;
  return WriteFileAtomic(csv_path + ".json", sidecar.dump(2) + "\n");
}

absl::StatusOr<GridPrior> ReadGridPrior(const std::string& csv_path) {
  absl::StatusOr<std::string> meta_text = ReadFile(csv_path + ".json");
  if (!meta_text.ok()) return meta_text.status();
  json meta;
  try {
    meta = json::parse(*meta_text);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(csv_path, ".json: ", e.what()));
  }
  absl::StatusOr<ProjectionRef> ref = absl::InternalError("unset");
  absl::StatusOr<Grid> grid = absl::InternalError("unset");
  try {
    ref = ProjectionRef::Create(
        GeoPoint{meta.at("origin_lat").get<double>(),
                 meta.at("origin_lon").get<double>()},
        meta.at("earth_radius_m").get<double>());
    grid = Grid::Create(PlanarPoint{meta.at("grid_origin_x_m").get<double>(),
                                    meta.at("grid_origin_y_m").get<double>()},
                        meta.at("cell_size_m").get<double>(),
                        meta.at("nx").get<int64_t>(),
                        meta.at("ny").get<int64_t>());
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(csv_path, ".json: ", e.what()));
  }
  if (!ref.ok()) return ref.status();
  if (!grid.ok()) return grid.status();

  absl::StatusOr<std::string> text = ReadFile(csv_path);
  if (!text.ok()) return text.status();
  std::vector<PmfAtom> atoms;
  size_t line_no = 0;
  for (std::string_view line : SplitFields(*text, '\n')) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    const std::vector<std::string_view> f = SplitFields(line, ',');
    absl::StatusOr<int64_t> cell =
        f.size() == 2 ? ParseInt64(f[0]) : absl::InvalidArgumentError("arity");
    absl::StatusOr<double> mass =
        f.size() == 2 ? ParseDouble(f[1]) : absl::InvalidArgumentError("arity");
    if (!cell.ok() || !mass.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          csv_path, ":", line_no, ": expected cell_index,mass"));
    }
    absl::StatusOr<PlanarPoint> center = grid->CellCenter(*cell);
    if (!center.ok()) return center.status();
    atoms.push_back(PmfAtom{*center, *mass, *cell});
  }
  absl::StatusOr<Pmf> pmf = Pmf::Create(std::move(atoms));
  if (!pmf.ok()) return pmf.status();
  return GridPrior{*ref, *grid, *std::move(pmf)};
}

}  // namespace geopriv

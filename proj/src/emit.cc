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

#include "geopriv/emit.h"

#include "absl/strings/str_cat.h"
#include "geopriv/geo.h"
#include "geopriv/io_util.h"

namespace geopriv {

namespace {

using json = nlohmann::json;

json NumberOrNull(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string OptionalField(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

std::string DumpJson(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

absl::StatusOr<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown output format '", std::string(name), "'"));
}

std::string FormatSummaries(std::span<const SummaryRow> rows,
                            OutputFormat format, int bins) {
  if (format == OutputFormat::kJson) {
    json out = json::array();
    for (const SummaryRow& r : rows) {
      out.push_back({{"family", FamilyName(r.family)},
                     {"d_m", r.d_m},
                     {"qavg_m", r.qavg_m},
                     {"avg_perr", r.avg_perr},
                     {"min_perr", r.min_perr},
                     {"pct_better", NumberOrNull(r.pct_better)},
                     {"histogram", r.histogram}});
    }
    return DumpJson(out);
  }
  const size_t width = rows.empty() ? static_cast<size_t>(bins)
                                    : rows.front().histogram.size();
  std::string out = "family,d_m,qavg_m,avg_perr,min_perr,pct_better";
  for (size_t b = 0; b < width; ++b) absl::StrAppend(&out, ",bin_", b);
  out += "\n";
  for (const SummaryRow& r : rows) {
    absl::StrAppend(&out, std::string(FamilyName(r.family)), ",", FormatDouble(r.d_m), ",",
                    FormatDouble(r.qavg_m), ",", FormatDouble(r.avg_perr), ",",
                    FormatDouble(r.min_perr), ",", OptionalField(r.pct_better));
    for (int64_t c : r.histogram) absl::StrAppend(&out, ",", c);
    out += "\n";
  }
  return out;
}

std::string FormatTradeoff(std::span<const TradeoffRow> rows,
                           OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json out = json::array();
    for (const TradeoffRow& r : rows) {
      out.push_back({{"epsilon_inv_km", r.epsilon_per_m * 1000.0},
                     {"eps_star", r.eps_star},
                     {"perr_min", r.perr_min},
                     {"qavg_m", r.qavg_m},
                     {"r95_m", r.r95_m}});
    }
    return DumpJson(out);
  }
  std::string out = "epsilon_inv_km,eps_star,perr_min,qavg_m,r95_m\n";
  for (const TradeoffRow& r : rows) {
    absl::StrAppend(&out, FormatDouble(r.epsilon_per_m * 1000.0), ",",
                    FormatDouble(r.eps_star), ",", FormatDouble(r.perr_min), ",",
                    FormatDouble(r.qavg_m), ",", FormatDouble(r.r95_m), "\n");
  }
  return out;
}

std::string FormatGowalla(std::span<const GowallaRow> rows,
                          OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json out = json::array();
    for (const GowallaRow& r : rows) {
      out.push_back({{"epsilon_inv_km", r.epsilon_per_m * 1000.0},
                     {"qavg_remap_m", r.qavg_remap_m},
                     {"r95_remap_m", r.r95_remap_m},
                     {"qavg_plain_m", r.qavg_plain_m},
                     {"r95_plain_m", r.r95_plain_m},
                     {"qavg_reduction_pct", r.qavg_reduction_pct},
                     {"r95_reduction_pct", r.r95_reduction_pct},
                     {"checkins_used", r.checkins_used}});
    }
    return DumpJson(out);
  }
  std::string out =
      "epsilon_inv_km,qavg_remap_m,r95_remap_m,qavg_plain_m,r95_plain_m,"
      "qavg_reduction_pct,r95_reduction_pct\n";
  for (const GowallaRow& r : rows) {
    absl::StrAppend(&out, FormatDouble(r.epsilon_per_m * 1000.0), ",",
                    FormatDouble(r.qavg_remap_m), ",", FormatDouble(r.r95_remap_m),
                    ",", FormatDouble(r.qavg_plain_m), ",",
                    FormatDouble(r.r95_plain_m), ",",
                    FormatDouble(r.qavg_reduction_pct), ",",
                    FormatDouble(r.r95_reduction_pct), "\n");
  }
  return out;
}

std::string FormatTrialRecords(std::span<const TrialRecord> records,
                               OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json out = json::array();
    for (const TrialRecord& r : records) {
      out.push_back({{"family", FamilyName(r.family)},
                     {"d_m", r.d_m},
                     {"qavg_m", r.qavg_m},
                     {"trial", r.trial},
                     {"true_location", r.true_is_x_prime ? "x_prime" : "x"},
                     {"z_x_m", r.z.x},
                     {"z_y_m", r.z.y},
                     {"perr", r.perr}});
    }
    return DumpJson(out);
  }
  std::string out = "family,d_m,qavg_m,trial,true_location,z_x_m,z_y_m,perr\n";
  for (const TrialRecord& r : records) {
    absl::StrAppend(&out, std::string(FamilyName(r.family)), ",", FormatDouble(r.d_m), ",",
                    FormatDouble(r.qavg_m), ",", r.trial, ",",
                    r.true_is_x_prime ? "x_prime" : "x", ",",
                    FormatDouble(r.z.x), ",", FormatDouble(r.z.y), ",",
                    FormatDouble(r.perr), "\n");
  }
  return out;
}

std::string FormatCrossovers(std::span<const Crossover> rows,
                             OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json out = json::array();
    for (const Crossover& c : rows) {
      out.push_back({{"family", FamilyName(c.family)},
                     {"qavg_m", c.qavg_m},
                     {"avg_perr_crossover_d_m", NumberOrNull(c.avg_perr_d_m)},
                     {"pct_better_crossover_d_m", NumberOrNull(c.pct_better_d_m)}});
    }
    return DumpJson(out);
  }
  std::string out =
      "family,qavg_m,avg_perr_crossover_d_m,pct_better_crossover_d_m\n";
  for (const Crossover& c : rows) {
    absl::StrAppend(&out, std::string(FamilyName(c.family)), ",", FormatDouble(c.qavg_m), ",",
                    OptionalField(c.avg_perr_d_m), ",",
                    OptionalField(c.pct_better_d_m), "\n");
  }
  return out;
}

std::string_view CodeVersion() { return "geopriv 1.0.0"; }

absl::Status EmitWithManifest(const std::string& path,
                              std::string_view contents, json manifest) {
  manifest["code_version"] = CodeVersion();
  manifest["earth_radius_m"] = kEarthRadiusMeters;
  manifest["output_digest_fnv1a64"] = Fnv1a64Hex(contents);
  if (auto s = WriteFileAtomic(path, contents); !s.ok()) return s;
  return WriteFileAtomic(path + ".manifest.json", manifest.dump(2) + "\n");
}

}  // namespace geopriv

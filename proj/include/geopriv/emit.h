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

#ifndef GEOPRIV_EMIT_H_
#define GEOPRIV_EMIT_H_

#include <span>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "geopriv/experiments.h"
#include "nlohmann/json.hpp"

namespace geopriv {

enum class OutputFormat { kCsv, kJson };

absl::StatusOr<OutputFormat> ParseOutputFormat(std::string_view name);

// Column layouts:
//   summary:  family,d_m,qavg_m,avg_perr,min_perr,pct_better,bin_0..bin_{B-1}
//   tradeoff: epsilon_inv_km,eps_star,perr_min,qavg_m,r95_m
//   gowalla:  epsilon_inv_km,qavg_remap_m,r95_remap_m,qavg_plain_m,
//             r95_plain_m,qavg_reduction_pct,r95_reduction_pct
//   trials:   family,d_m,qavg_m,trial,true_location,z_x_m,z_y_m,perr
//   crossover: family,qavg_m,avg_perr_crossover_d_m,pct_better_crossover_d_m
// Numbers use the shortest round-trip decimal form; absent values are empty
// fields (CSV) or null (JSON). `bins` sets the header width when `rows` is
// empty.
std::string FormatSummaries(std::span<const SummaryRow> rows, OutputFormat format,
                            int bins = 50);
std::string FormatTradeoff(std::span<const TradeoffRow> rows, OutputFormat format);
std::string FormatGowalla(std::span<const GowallaRow> rows, OutputFormat format);
std::string FormatTrialRecords(std::span<const TrialRecord> records,
                               OutputFormat format);
std::string FormatCrossovers(std::span<const Crossover> rows, OutputFormat format);

// Atomically writes `contents` to `path`, then writes `path + ".manifest.json"`
// holding `manifest` plus the tool version and a digest of `contents`.
absl::Status EmitWithManifest(const std::string& path, std::string_view contents,
                              nlohmann::json manifest);

// Version string recorded in manifests.
std::string_view CodeVersion();

}  // namespace geopriv

#endif  // GEOPRIV_EMIT_H_

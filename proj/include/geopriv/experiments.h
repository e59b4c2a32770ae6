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

#ifndef GEOPRIV_EXPERIMENTS_H_
#define GEOPRIV_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "geopriv/dataset.h"
#include "geopriv/geo.h"
#include "geopriv/mechanisms.h"
#include "geopriv/random.h"
#include "geopriv/remap.h"

namespace geopriv {

// Outcome of one decision-adversary trial.
struct TrialRecord {
  Family family = Family::kLaplace;
  double d_m = 0.0;
  double qavg_m = 0.0;
  int64_t trial = 0;
  bool true_is_x_prime = false;
  PlanarPoint z;
  double perr = 0.0;
};

// Picks the true location uniformly from {x, x'}, draws z from it and
// records Perr(f(z|x), f(z|x')). The trial index is the stream index of
// `rnd`.
absl::StatusOr<TrialRecord> DecisionTrial(const MechanismParams& params,
                                          const PlanarPoint& x,
                                          const PlanarPoint& x_prime,
                                          RandomStream& rnd);

struct DecisionExperimentConfig {
  std::vector<double> distances_m;
  std::vector<double> qavgs_m;
  std::vector<Family> families = {Family::kLaplace, Family::kGaussian,
                                  Family::kCircular};
  int64_t trials = 20000;
  uint64_t seed = 42;
  int histogram_bins = 50;

  absl::Status Validate() const;
};

struct SummaryRow {
  Family family = Family::kLaplace;
  double d_m = 0.0;
  double qavg_m = 0.0;
  double avg_perr = 0.0;
  double min_perr = 0.0;
  // Standard error of avg_perr. Not part of the CSV schema.
  double std_error = 0.0;
  // Percentage of paired trials in which this family's Perr beats Laplace's.
  // Absent for Laplace itself.
  std::optional<double> pct_better;
  // Counts over equal-width bins of [0, 0.5]; Perr = 0.5 lands in the last.
  std::vector<int64_t> histogram;
};

struct ExecutionOptions {
  int threads = 1;
  bool keep_records = false;
};

struct DecisionExperimentResult {
  // Ordered by family (config order), then qavg, then d.
  std::vector<SummaryRow> summaries;
  // Same order; within a cell by trial index. Empty unless requested.
  std::vector<TrialRecord> records;
};

// For every (family, d, qavg): calibrates the family to qavg, places x at
// (0, 0) and x' at (d, 0), and runs `trials` trials where trial k uses
// RandomStream(seed, k). Laplace trials are run for pairing even when
// Laplace is not among the requested families. The result does not depend
// on `options.threads`.
absl::StatusOr<DecisionExperimentResult> RunDecisionExperiment(
    const DecisionExperimentConfig& config, const ExecutionOptions& options = {});

// Percentage of trials, paired by index, in which `family` has strictly
// larger Perr than `laplace`. InvalidArgument ("GridMismatch") unless both
// cover the same (d, qavg) and trial indices.
absl::StatusOr<double> PctBetter(std::span<const TrialRecord> family,
                                 std::span<const TrialRecord> laplace);

// First grid distance at which a family stops beating Laplace.
struct Crossover {
  Family family = Family::kGaussian;
  double qavg_m = 0.0;
  // avg_perr(family) - avg_perr(laplace) changes sign.
  std::optional<double> avg_perr_d_m;
  // pct_better drops to 50% or below.
  std::optional<double> pct_better_d_m;
};

std::vector<Crossover> FindCrossovers(std::span<const SummaryRow> summaries);

struct TradeoffRow {
  double epsilon_per_m = 0.0;
  double eps_star = 0.0;
  double perr_min = 0.0;
  double qavg_m = 0.0;
  double r95_m = 0.0;
};

// Laplace privacy/utility figures at radius r_star for each epsilon.
absl::StatusOr<std::vector<TradeoffRow>> TradeoffTable(
    std::span<const double> epsilons_per_m, double r_star_m);

// The epsilon at which PerrMin(epsilon, r_star) equals `perr_min`.
absl::StatusOr<double> EpsilonForPerrMin(double perr_min, double r_star_m);

// Nearest-rank quantile of `values` (copied and sorted).
double EmpiricalQuantile(std::vector<double> values, double q);

struct GowallaConfig {
  std::vector<double> epsilons_per_m = {6.67e-3, 4e-3, 2e-3, 1e-3};
  int64_t n_checkins = 20000;
  uint64_t seed = 42;
  RemapOptions remap;
};

struct GowallaRow {
  double epsilon_per_m = 0.0;
  double qavg_remap_m = 0.0;
  double r95_remap_m = 0.0;
  double qavg_plain_m = 0.0;  // analytic, 2 / epsilon
  double r95_plain_m = 0.0;   // analytic
  double qavg_reduction_pct = 0.0;
  double r95_reduction_pct = 0.0;
  int64_t checkins_used = 0;
};

// Samples up to n_checkins test check-ins without replacement and, for each
// epsilon, obfuscates them with Laplace plus remapping onto `prior`.
// Check-in i of the sample uses RandomStream(seed, i).
absl::StatusOr<std::vector<GowallaRow>> GowallaRemapExperiment(
    std::span<const Checkin> test, const GridPrior& prior,
    const GowallaConfig& config, int threads = 1);

}  // namespace geopriv

#endif  // GEOPRIV_EXPERIMENTS_H_

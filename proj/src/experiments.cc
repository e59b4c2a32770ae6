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

#include "geopriv/experiments.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "geopriv/metrics.h"

namespace geopriv {

namespace {

// Runs fn(i) for i in [0, n) over contiguous blocks, one per worker. Each
// index is written by exactly one worker, so results never depend on the
// schedule.
void ParallelFor(int64_t n, int threads,
                 const std::function<void(int64_t)>& fn) {
  const int64_t workers =
      std::clamp<int64_t>(threads, 1, std::max<int64_t>(n, 1));
  if (workers == 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int64_t w = 0; w < workers; ++w) {
    const int64_t begin = n * w / workers;
    const int64_t end = n * (w + 1) / workers;
    pool.emplace_back([begin, end, &fn] {
      for (int64_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

absl::Status RunCell(const MechanismParams& params, double d_m, double qavg_m,
                     int64_t trials, uint64_t seed, int threads,
                     std::vector<TrialRecord>& out) {
  out.assign(static_cast<size_t>(trials), TrialRecord{});
  const PlanarPoint x{0.0, 0.0};
  const PlanarPoint x_prime{d_m, 0.0};
  std::vector<absl::Status> errors(static_cast<size_t>(trials));
  ParallelFor(trials, threads, [&](int64_t k) {
    RandomStream rnd(seed, static_cast<uint64_t>(k));
    absl::StatusOr<TrialRecord> r = DecisionTrial(params, x, x_prime, rnd);
    if (!r.ok()) {
      errors[k] = r.status();
      return;
    }
    r->qavg_m = qavg_m;
    out[k] = *r;
  });
  for (const absl::Status& s : errors) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

SummaryRow Summarize(Family family, double d_m, double qavg_m,
                     const std::vector<TrialRecord>& records, int bins) {
  SummaryRow row;
  row.family = family;
  row.d_m = d_m;
  row.qavg_m = qavg_m;
  row.histogram.assign(static_cast<size_t>(bins), 0);
  row.min_perr = std::numeric_limits<double>::infinity();
  double sum = 0.0, sum_sq = 0.0;
  for (const TrialRecord& r : records) {
    sum += r.perr;
    sum_sq += r.perr * r.perr;
    row.min_perr = std::min(row.min_perr, r.perr);
    auto bin = static_cast<int64_t>(r.perr / 0.5 * bins);
    bin = std::clamp<int64_t>(bin, 0, bins - 1);
    ++row.histogram[static_cast<size_t>(bin)];
  }
  const auto n = static_cast<double>(records.size());
  row.avg_perr = sum / n;
  if (records.size() > 1) {
    const double var = std::max(0.0, (sum_sq - n * row.avg_perr * row.avg_perr) /
                                         (n - 1.0));
    row.std_error = std::sqrt(var / n);
  }
  return row;
}

}  // namespace

absl::StatusOr<TrialRecord> DecisionTrial(const MechanismParams& params,
                                          const PlanarPoint& x,
                                          const PlanarPoint& x_prime,
                                          RandomStream& rnd) {
  if (x == x_prime) {
    return absl::InvalidArgumentError("decision trial needs x != x'");
  }
  TrialRecord rec;
  rec.family = params.family();
  rec.d_m = Distance(x, x_prime);
  rec.qavg_m = AnalyticQavg(params);
  rec.trial = static_cast<int64_t>(rnd.stream_index());
  rec.true_is_x_prime = (rnd.NextU64() >> 63) != 0;
  rec.z = Sample(params, rec.true_is_x_prime ? x_prime : x, rnd);
  absl::StatusOr<double> perr =
      Perr(Density(params, rec.z, x), Density(params, rec.z, x_prime));
  if (!perr.ok()) {
    // z comes from one of the two densities, so both cannot vanish.
    return absl::InternalError(
        absl::StrCat("decision trial produced an impossible output: ",
                     perr.status().message()));
  }
  rec.perr = *perr;
  return rec;
}

absl::Status DecisionExperimentConfig::Validate() const {
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (distances_m.empty() || qavgs_m.empty() || families.empty()) {
    return absl::InvalidArgumentError(
        "need at least one distance, average loss and family");
  }
  for (double d : distances_m) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      return absl::InvalidArgumentError(absl::StrCat("invalid distance ", d));
    }
  }
  for (double q : qavgs_m) {
    if (!(q > 0.0) || !std::isfinite(q)) {
      return absl::InvalidArgumentError(absl::StrCat("invalid average loss ", q));
    }
  }
  if (histogram_bins < 1) {
    return absl::InvalidArgumentError("histogram_bins must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<DecisionExperimentResult> RunDecisionExperiment(
    const DecisionExperimentConfig& config, const ExecutionOptions& options) {
  if (auto s = config.Validate(); !s.ok()) return s;

  const size_t nf = config.families.size();
  const size_t nq = config.qavgs_m.size();
  const size_t nd = config.distances_m.size();
  std::vector<SummaryRow> rows(nf * nq * nd);
  std::vector<std::vector<TrialRecord>> kept(options.keep_records ? rows.size()
                                                                  : 0);
  auto slot = [&](size_t f, size_t q, size_t d) { return (f * nq + q) * nd + d; };

  for (size_t q = 0; q < nq; ++q) {
    const double qavg = config.qavgs_m[q];
    for (size_t d = 0; d < nd; ++d) {
      const double dist = config.distances_m[d];
      std::vector<TrialRecord> laplace;
      {
        absl::StatusOr<MechanismParams> p = CalibrateToQavg(Family::kLaplace, qavg);
        if (!p.ok()) return p.status();
        if (auto s = RunCell(*p, dist, qavg, config.trials, config.seed,
                             options.threads, laplace);
            !s.ok()) {
          return s;
        }
      }
      for (size_t f = 0; f < nf; ++f) {
        const Family family = config.families[f];
        std::vector<TrialRecord> records;
        if (family == Family::kLaplace) {
          records = laplace;
        } else {
          absl::StatusOr<MechanismParams> p = CalibrateToQavg(family, qavg);
          if (!p.ok()) return p.status();
          if (auto s = RunCell(*p, dist, qavg, config.trials, config.seed,
                               options.threads, records);
              !s.ok()) {
            return s;
          }
        }
        SummaryRow row =
            Summarize(family, dist, qavg, records, config.histogram_bins);
        if (family != Family::kLaplace) {
          absl::StatusOr<double> pct = PctBetter(records, laplace);
          if (!pct.ok()) return pct.status();
          row.pct_better = *pct;
        }
        rows[slot(f, q, d)] = std::move(row);
        if (options.keep_records) kept[slot(f, q, d)] = std::move(records);
      }
    }
  }

  DecisionExperimentResult result;
  result.summaries = std::move(rows);
  for (auto& cell : kept) {
    result.records.insert(result.records.end(), cell.begin(), cell.end());
  }
  return result;
}

absl::StatusOr<double> PctBetter(std::span<const TrialRecord> family,
                                 std::span<const TrialRecord> laplace) {
  if (family.size() != laplace.size() || family.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "GridMismatch: ", family.size(), " vs ", laplace.size(), " trials"));
  }
  int64_t better = 0;
  for (size_t i = 0; i < family.size(); ++i) {
    const TrialRecord& a = family[i];
    const TrialRecord& b = laplace[i];
    if (a.d_m != b.d_m || a.qavg_m != b.qavg_m || a.trial != b.trial) {
      return absl::InvalidArgumentError(
          absl::StrCat("GridMismatch: trial ", i, " is not paired"));
    }
    if (a.perr > b.perr) ++better;
  }
  return 100.0 * static_cast<double>(better) /
         static_cast<double>(family.size());
}

std::vector<Crossover> FindCrossovers(std::span<const SummaryRow> summaries) {
  // (qavg, d) -> Laplace avg_perr.
  std::map<std::pair<double, double>, double> laplace;
  // (family, qavg) -> rows sorted by d.
  std::map<std::pair<int, double>, std::vector<const SummaryRow*>> by_curve;
  for (const SummaryRow& r : summaries) {
    if (r.family == Family::kLaplace) {
      laplace[{r.qavg_m, r.d_m}] = r.avg_perr;
    } else {
      by_curve[{static_cast<int>(r.family), r.qavg_m}].push_back(&r);
    }
  }
  std::vector<Crossover> out;
  for (auto& [key, rows] : by_curve) {
    std::sort(rows.begin(), rows.end(),
              [](const SummaryRow* a, const SummaryRow* b) { return a->d_m < b->d_m; });
    Crossover c;
    c.family = static_cast<Family>(key.first);
    c.qavg_m = key.second;
    int first_sign = 0;
    for (const SummaryRow* r : rows) {
      const auto it = laplace.find({r->qavg_m, r->d_m});
      if (it != laplace.end() && !c.avg_perr_d_m) {
        const double diff = r->avg_perr - it->second;
        const int sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
        if (first_sign == 0) {
          first_sign = sign;
        } else if (sign != 0 && sign != first_sign) {
          c.avg_perr_d_m = r->d_m;
        }
      }
      if (r->pct_better && *r->pct_better <= 50.0 && !c.pct_better_d_m) {
        c.pct_better_d_m = r->d_m;
      }
    }
    out.push_back(c);
  }
  return out;
}

absl::StatusOr<std::vector<TradeoffRow>> TradeoffTable(
    std::span<const double> epsilons_per_m, double r_star_m) {
  if (!(r_star_m >= 0.0)) {
    return absl::InvalidArgumentError("privacy radius must be >= 0");
  }
  std::vector<TradeoffRow> rows;
  rows.reserve(epsilons_per_m.size());
  for (double eps : epsilons_per_m) {
    absl::StatusOr<MechanismParams> p = MechanismParams::Laplace(eps);
    if (!p.ok()) return p.status();
    rows.push_back(TradeoffRow{eps, EpsilonStar(eps, r_star_m),
                               PerrMin(eps, r_star_m), AnalyticQavg(*p),
                               AnalyticR95(*p)});
  }
  return rows;
}

absl::StatusOr<double> EpsilonForPerrMin(double perr_min, double r_star_m) {
  if (!(perr_min > 0.0 && perr_min < 0.5)) {
    return absl::InvalidArgumentError("target Perr_min must be in (0, 0.5)");
  }
  if (!(r_star_m > 0.0)) {
    return absl::InvalidArgumentError("privacy radius must be positive");
  }
  return std::log(1.0 / perr_min - 1.0) / r_star_m;
}

double EmpiricalQuantile(std::vector<double> values, double q) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  auto rank = static_cast<size_t>(std::ceil(q * n));
  rank = std::clamp<size_t>(rank, 1, values.size());
  return values[rank - 1];
}

absl::StatusOr<std::vector<GowallaRow>> GowallaRemapExperiment(
    std::span<const Checkin> test, const GridPrior& prior,
    const GowallaConfig& config, int threads) {
  if (test.empty()) {
    return absl::FailedPreconditionError("no test check-ins");
  }
  if (config.n_checkins < 1) {
    return absl::InvalidArgumentError("n_checkins must be >= 1");
  }

  // Partial Fisher-Yates: the first n entries of `order` are a uniform
  // sample without replacement.
  std::vector<size_t> order(test.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  const size_t n = std::min<size_t>(order.size(),
                                    static_cast<size_t>(config.n_checkins));
  RandomStream pick(config.seed ^ 0x5bd1e9955bd1e995ull, 0);
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + static_cast<size_t>(pick.UniformIndex(order.size() - i));
    std::swap(order[i], order[j]);
  }
  std::vector<PlanarPoint> xs(n);
  for (size_t i = 0; i < n; ++i) {
    absl::StatusOr<PlanarPoint> p = Project(test[order[i]].location, prior.projection);
    if (!p.ok()) return p.status();
    xs[i] = *p;
  }

  std::vector<GowallaRow> rows;
  for (double eps : config.epsilons_per_m) {
    absl::StatusOr<MechanismParams> base = MechanismParams::Laplace(eps);
    if (!base.ok()) return base.status();
    absl::StatusOr<RemappedMechanism> rm =
        RemappedMechanism::Create(*base, prior.grid, prior.prior, config.remap);
    if (!rm.ok()) return rm.status();

    std::vector<double> loss(n);
    ParallelFor(static_cast<int64_t>(n), threads, [&](int64_t i) {
      RandomStream rnd(config.seed, static_cast<uint64_t>(i));
      loss[i] = Distance(xs[i], rm->RemappedSample(xs[i], rnd));
    });

    GowallaRow row;
    row.epsilon_per_m = eps;
    double sum = 0.0;
    for (double l : loss) sum += l;
    row.qavg_remap_m = sum / static_cast<double>(n);
    row.r95_remap_m = EmpiricalQuantile(loss, 0.95);
    row.qavg_plain_m = AnalyticQavg(*base);
    row.r95_plain_m = AnalyticR95(*base);
    row.qavg_reduction_pct = 100.0 * (1.0 - row.qavg_remap_m / row.qavg_plain_m);
    row.r95_reduction_pct = 100.0 * (1.0 - row.r95_remap_m / row.r95_plain_m);
    row.checkins_used = static_cast<int64_t>(n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace geopriv

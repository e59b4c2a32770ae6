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

#include "geopriv/cli.h"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "geopriv/dataset.h"
#include "geopriv/emit.h"
#include "geopriv/experiments.h"
#include "geopriv/io_util.h"
#include "geopriv/mechanisms.h"
#include "geopriv/metrics.h"
#include "geopriv/remap.h"
#include "nlohmann/json.hpp"

namespace geopriv {

namespace {

using json = nlohmann::json;

constexpr char kDefaultCheckinsFile[] = "loc-gowalla_totalCheckins.txt";

struct MechanismFlags {
  std::string family = "laplace";
  std::optional<double> epsilon_inv_km;
  std::optional<double> sigma_m;
  std::optional<double> radius_m;
  std::optional<double> qavg_m;
};

struct RemapFlags {
  double tolerance_m = 1e-3;
  int max_iters = 200;
  double weight_floor = 1e-12;

  RemapOptions ToOptions() const {
    RemapOptions o;
    o.weiszfeld.tolerance = tolerance_m;
    o.weiszfeld.max_iterations = max_iters;
    o.relative_weight_floor = weight_floor;
    return o;
  }
  json ToJson() const {
    return {{"tolerance_m", tolerance_m},
            {"max_iters", max_iters},
            {"weight_floor", weight_floor}};
  }
};

struct DatasetFlags {
  std::string checkins;
  std::vector<double> region;  // min_lat,max_lat,min_lon,max_lon
  double cell_m = 100.0;
  double train_fraction = 0.8;
  double smoothing = 0.0;
};

struct Flags {
  int threads = 1;
  std::string config;
  std::string out;
  std::string format = "csv";
  uint64_t seed = 42;

  MechanismFlags mechanism;
  RemapFlags remap;
  DatasetFlags dataset;

  // sample
  double x_m = 0.0;
  double y_m = 0.0;
  int64_t count = 1;
  std::string prior_csv;

  // tradeoff
  std::vector<double> epsilons_inv_km;
  std::vector<double> perr_min_targets;
  double r_star_m = 0.0;

  // experiment decision
  std::vector<std::string> families = {"laplace", "gaussian", "circular"};
  std::vector<double> d_m;
  std::vector<double> qavgs_m;
  int64_t trials = 20000;
  int bins = 50;
  std::string records_out;
  std::string crossover_out;

  // experiment gowalla
  int64_t n_checkins = 20000;

  // verify
  std::string mechanism_csv;
  std::optional<double> verify_epsilon_inv_km;
};

// Appends every field of the --config JSON object that is not already given
// on the command line as "--<field> <value>". Arrays become comma lists.
absl::StatusOr<std::vector<std::string>> ExpandConfig(
    std::vector<std::string> args) {
  std::string path;
  for (size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  json config;
  try {
    config = json::parse(*text);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("config ", path, ": ", e.what()));
  }
  if (!config.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat("config ", path, ": expected a JSON object"));
  }
  auto scalar = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return FormatDouble(v.get<double>());
    return v.dump();
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : config.items()) {
    std::string flag = "--" + key;
    for (char& c : flag) {
      if (c == '_') c = '-';
    }
    bool present = false;
    for (const std::string& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    }
    if (present) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) extra.push_back(flag);
      continue;
    }
    extra.push_back(flag);
    if (value.is_array()) {
      std::vector<std::string> parts;
      for (const json& v : value) parts.push_back(scalar(v));
      extra.push_back(absl::StrJoin(parts, ","));
    } else {
      extra.push_back(scalar(value));
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

absl::StatusOr<MechanismParams> ResolveMechanism(const MechanismFlags& f) {
  absl::StatusOr<Family> family = ParseFamily(f.family);
  if (!family.ok()) return family.status();
  if (f.qavg_m) return CalibrateToQavg(*family, *f.qavg_m);
  switch (*family) {
    case Family::kLaplace:
      if (f.epsilon_inv_km) return MechanismParams::Laplace(*f.epsilon_inv_km / 1000.0);
      break;
    case Family::kGaussian:
      if (f.sigma_m) return MechanismParams::Gaussian(*f.sigma_m);
      break;
    case Family::kCircular:
      if (f.radius_m) return MechanismParams::Circular(*f.radius_m);
      break;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "family ", f.family,
      " needs --qavg-m or its own scale flag (--epsilon-inv-km, --sigma-m or "
      "--radius-m)"));
}

json MechanismJson(const MechanismParams& p) {
  json j = {{"family", std::string(FamilyName(p.family()))}};
  switch (p.family()) {
    case Family::kLaplace:
      j["epsilon_inv_km"] = p.scale() * 1000.0;
      break;
    case Family::kGaussian:
      j["sigma_m"] = p.scale();
      break;
    case Family::kCircular:
      j["radius_m"] = p.scale();
      break;
  }
  j["qavg_m"] = AnalyticQavg(p);
  j["r95_m"] = AnalyticR95(p);
  return j;
}

absl::StatusOr<Region> ResolveRegion(const DatasetFlags& f) {
  if (f.region.empty()) return Region::SanFrancisco();
  if (f.region.size() != 4) {
    return absl::InvalidArgumentError(
        "--region takes min_lat,max_lat,min_lon,max_lon");
  }
  return Region::Create(f.region[0], f.region[1], f.region[2], f.region[3]);
}

std::string ResolveCheckinsPath(const DatasetFlags& f) {
  if (!f.checkins.empty()) return f.checkins;
  const char* dir = std::getenv("GEOPRIV_DATA");
  if (dir == nullptr || *dir == '\0') return kDefaultCheckinsFile;
  return absl::StrCat(dir, "/", kDefaultCheckinsFile);
}

json RegionJson(const Region& r) {
  return {{"min_lat", r.min_lat},
          {"max_lat", r.max_lat},
          {"min_lon", r.min_lon},
          {"max_lon", r.max_lon}};
}

// Loads check-ins, splits users and builds the prior over the region grid.
struct PreparedDataset {
  GridPrior prior;
  UserSplit split;
  LoadStats stats;
  std::string digest;
  json manifest;
};

absl::StatusOr<PreparedDataset> PrepareDataset(const Flags& flags,
                                               std::ostream& err) {
  absl::StatusOr<Region> region = ResolveRegion(flags.dataset);
  if (!region.ok()) return region.status();
  const std::string path = ResolveCheckinsPath(flags.dataset);
  absl::StatusOr<CheckinLoad> load = LoadCheckins(path, *region);
  if (!load.ok()) return load.status();
  err << "loaded " << load->checkins.size() << " check-ins in region ("
      << load->stats.parsed << " parsed, " << load->stats.malformed
      << " malformed, " << load->stats.outside_region << " outside region)\n";
  absl::StatusOr<std::string> digest = Fnv1a64FileHex(path);
  if (!digest.ok()) return digest.status();
  absl::StatusOr<UserSplit> split =
      SplitUsers(load->checkins, SplitSpec{flags.dataset.train_fraction, flags.seed});
  if (!split.ok()) return split.status();
  err << "split: " << split->train_users << " train users, "
      << split->test_users << " test users\n";
  absl::StatusOr<ProjectionRef> ref = RegionProjection(*region);
  if (!ref.ok()) return ref.status();
  absl::StatusOr<Grid> grid = RegionGrid(*region, *ref, flags.dataset.cell_m);
  if (!grid.ok()) return grid.status();
  absl::StatusOr<Pmf> prior = EmpiricalPrior(split->train, *grid, *ref,
                                             PriorOptions{flags.dataset.smoothing});
  if (!prior.ok()) return prior.status();

  json manifest = {
      {"dataset_path_basename",
       path.substr(path.find_last_of('/') == std::string::npos
                       ? 0
                       : path.find_last_of('/') + 1)},
      {"dataset_digest_fnv1a64", *digest},
      {"region", RegionJson(*region)},
      {"cell_m", flags.dataset.cell_m},
      {"train_fraction", flags.dataset.train_fraction},
      {"smoothing", flags.dataset.smoothing},
      {"split_seed", flags.seed},
      {"checkins_in_region", load->checkins.size()},
      {"train_users", split->train_users},
      {"test_users", split->test_users},
      {"prior_cells", prior->size()},
  };
  return PreparedDataset{GridPrior{*ref, *grid, *std::move(prior)},
                         *std::move(split), load->stats, *digest,
                         std::move(manifest)};
}

// Writes to --out with a manifest, or to `out` when no path was given.
absl::Status Deliver(const Flags& flags, std::ostream& out,
                     const std::string& contents, json manifest) {
  if (flags.out.empty()) {
    out << contents;
    return absl::OkStatus();
  }
  return EmitWithManifest(flags.out, contents, std::move(manifest));
}

absl::StatusOr<OutputFormat> Format(const Flags& flags) {
  return ParseOutputFormat(flags.format);
}

absl::Status RunCalibrate(const Flags& flags, std::ostream& out) {
  absl::StatusOr<MechanismParams> p = ResolveMechanism(flags.mechanism);
  if (!p.ok()) return p.status();
  const json j = MechanismJson(*p);
  return Deliver(flags, out, j.dump(2) + "\n",
                 {{"command", "calibrate"}, {"mechanism", j}});
}

absl::Status RunSample(const Flags& flags, std::ostream& out) {
  absl::StatusOr<MechanismParams> p = ResolveMechanism(flags.mechanism);
  if (!p.ok()) return p.status();
  if (flags.count < 1) return absl::InvalidArgumentError("--count must be >= 1");
  std::optional<RemappedMechanism> rm;
  json manifest = {{"command", "sample"},
                   {"mechanism", MechanismJson(*p)},
                   {"x_m", flags.x_m},
                   {"y_m", flags.y_m},
                   {"count", flags.count},
                   {"seed", flags.seed}};
  if (!flags.prior_csv.empty()) {
    absl::StatusOr<GridPrior> prior = ReadGridPrior(flags.prior_csv);
    if (!prior.ok()) return prior.status();
    absl::StatusOr<RemappedMechanism> m = RemappedMechanism::Create(
        *p, prior->grid, prior->prior, flags.remap.ToOptions());
    if (!m.ok()) return m.status();
    rm = *std::move(m);
    absl::StatusOr<std::string> digest = Fnv1a64FileHex(flags.prior_csv);
    if (!digest.ok()) return digest.status();
    manifest["remap"] = flags.remap.ToJson();
    manifest["remap"]["prior_digest_fnv1a64"] = *digest;
  }
  const PlanarPoint x{flags.x_m, flags.y_m};
  std::string csv = "index,z_x_m,z_y_m\n";
  for (int64_t i = 0; i < flags.count; ++i) {
    RandomStream rnd(flags.seed, static_cast<uint64_t>(i));
    const PlanarPoint z = rm ? rm->RemappedSample(x, rnd) : Sample(*p, x, rnd);
    absl::StrAppend(&csv, i, ",", FormatDouble(z.x), ",", FormatDouble(z.y), "\n");
  }
  return Deliver(flags, out, csv, std::move(manifest));
}

absl::Status RunTradeoff(const Flags& flags, std::ostream& out) {
  absl::StatusOr<OutputFormat> format = Format(flags);
  if (!format.ok()) return format.status();
  std::vector<double> eps;
  for (double e : flags.epsilons_inv_km) eps.push_back(e / 1000.0);
  for (double target : flags.perr_min_targets) {
    absl::StatusOr<double> e = EpsilonForPerrMin(target, flags.r_star_m);
    if (!e.ok()) return e.status();
    eps.push_back(*e);
  }
  if (eps.empty()) {
    return absl::InvalidArgumentError(
        "tradeoff needs --epsilons-inv-km or --perr-min");
  }
  absl::StatusOr<std::vector<TradeoffRow>> rows = TradeoffTable(eps, flags.r_star_m);
  if (!rows.ok()) return rows.status();
  return Deliver(flags, out, FormatTradeoff(*rows, *format),
                 {{"command", "tradeoff"},
                  {"epsilons_inv_km", flags.epsilons_inv_km},
                  {"perr_min", flags.perr_min_targets},
                  {"r_star_m", flags.r_star_m},
                  {"format", flags.format}});
}

absl::Status RunDecision(const Flags& flags, std::ostream& out, std::ostream& err) {
  absl::StatusOr<OutputFormat> format = Format(flags);
  if (!format.ok()) return format.status();
  DecisionExperimentConfig config;
  config.families.clear();
  for (const std::string& name : flags.families) {
    absl::StatusOr<Family> f = ParseFamily(name);
    if (!f.ok()) return f.status();
    config.families.push_back(*f);
  }
  config.distances_m = flags.d_m;
  config.qavgs_m = flags.qavgs_m;
  config.trials = flags.trials;
  config.seed = flags.seed;
  config.histogram_bins = flags.bins;
  ExecutionOptions exec{flags.threads, !flags.records_out.empty()};
  absl::StatusOr<DecisionExperimentResult> result =
      RunDecisionExperiment(config, exec);
  if (!result.ok()) return result.status();
  err << "ran " << result->summaries.size() << " cells x " << config.trials
      << " trials\n";

  const json manifest = {{"command", "experiment decision"},
                         {"families", flags.families},
                         {"d_m", flags.d_m},
                         {"qavg_m", flags.qavgs_m},
                         {"trials", flags.trials},
                         {"seed", flags.seed},
                         {"bins", flags.bins},
                         {"format", flags.format}};
  if (!flags.records_out.empty()) {
    if (auto s = EmitWithManifest(flags.records_out,
                                  FormatTrialRecords(result->records, *format),
                                  manifest);
        !s.ok()) {
      return s;
    }
  }
  if (!flags.crossover_out.empty()) {
    const std::vector<Crossover> cross = FindCrossovers(result->summaries);
    if (auto s = EmitWithManifest(flags.crossover_out,
                                  FormatCrossovers(cross, *format), manifest);
        !s.ok()) {
      return s;
    }
  }
  return Deliver(flags, out,
                 FormatSummaries(result->summaries, *format, flags.bins),
                 manifest);
}

absl::Status RunGowalla(const Flags& flags, std::ostream& out, std::ostream& err) {
  absl::StatusOr<OutputFormat> format = Format(flags);
  if (!format.ok()) return format.status();
  absl::StatusOr<PreparedDataset> data = PrepareDataset(flags, err);
  if (!data.ok()) return data.status();
  GowallaConfig config;
  config.epsilons_per_m.clear();
  for (double e : flags.epsilons_inv_km) config.epsilons_per_m.push_back(e / 1000.0);
  config.n_checkins = flags.n_checkins;
  config.seed = flags.seed;
  config.remap = flags.remap.ToOptions();
  absl::StatusOr<std::vector<GowallaRow>> rows = GowallaRemapExperiment(
      data->split.test, data->prior, config, flags.threads);
  if (!rows.ok()) return rows.status();
  json manifest = {{"command", "experiment gowalla"},
                   {"dataset", data->manifest},
                   {"epsilons_inv_km", flags.epsilons_inv_km},
                   {"n_checkins", flags.n_checkins},
                   {"seed", flags.seed},
                   {"remap", flags.remap.ToJson()},
                   {"format", flags.format}};
  return Deliver(flags, out, FormatGowalla(*rows, *format), std::move(manifest));
}

absl::Status RunPriorBuild(const Flags& flags, std::ostream& err) {
  if (flags.out.empty()) return absl::InvalidArgumentError("--out is required");
  absl::StatusOr<PreparedDataset> data = PrepareDataset(flags, err);
  if (!data.ok()) return data.status();
  if (auto s = WriteGridPrior(data->prior, flags.out); !s.ok()) return s;
  absl::StatusOr<std::string> csv = ReadFile(flags.out);
  if (!csv.ok()) return csv.status();
  json manifest = {{"command", "prior build"}, {"dataset", data->manifest}};
  manifest["code_version"] = CodeVersion();
  manifest["earth_radius_m"] = kEarthRadiusMeters;
  manifest["output_digest_fnv1a64"] = Fnv1a64Hex(*csv);
  return WriteFileAtomic(flags.out + ".manifest.json", manifest.dump(2) + "\n");
}

absl::Status RunVerify(const Flags& flags, std::ostream& out) {
  absl::StatusOr<DiscreteMechanism> mech = ReadDiscreteMechanismCsv(flags.mechanism_csv);
  if (!mech.ok()) return mech.status();
  absl::StatusOr<double> tightest = TightestEpsilon(*mech);
  if (!tightest.ok()) return tightest.status();

  absl::StatusOr<Pmf> prior = absl::InternalError("unset");
  if (flags.prior_csv.empty()) {
    std::vector<PmfAtom> atoms;
    for (const PlanarPoint& x : mech->inputs()) atoms.push_back({x, 1.0, -1});
    prior = Pmf::FromWeights(std::move(atoms));
  } else {
    prior = ReadPointPmfCsv(flags.prior_csv);
  }
  if (!prior.ok()) return prior.status();

  const double eps = flags.verify_epsilon_inv_km ? *flags.verify_epsilon_inv_km / 1000.0
                                                 : *tightest;
  json report = {{"tightest_epsilon_inv_km", *tightest * 1000.0},
                 {"epsilon_inv_km", eps * 1000.0},
                 {"geo_indistinguishable", SatisfiesGeoInd(*mech, eps)},
                 {"perr_bound_holds", SatisfiesPerrBound(*mech, eps)},
                 {"prior_diameter_m", PriorDiameter(*prior)}};
  if (std::isfinite(eps)) {
    absl::StatusOr<PosteriorBoundReport> bound =
        PosteriorBoundHolds(*prior, *mech, eps);
    if (!bound.ok()) return bound.status();
    report["posterior_bound"] = {{"holds", bound->holds},
                                 {"bound", bound->bound},
                                 {"worst_output", bound->worst_output},
                                 {"worst_gap", bound->worst_gap},
                                 {"outputs_checked", bound->outputs_checked},
                                 {"outputs_skipped", bound->outputs_skipped}};
  } else {
    report["posterior_bound"] = nullptr;
  }
  // nlohmann refuses to serialize inf; report it as a string.
  if (!std::isfinite(*tightest)) report["tightest_epsilon_inv_km"] = "inf";
  if (!std::isfinite(eps)) report["epsilon_inv_km"] = "inf";
  return Deliver(flags, out, report.dump(2) + "\n",
                 {{"command", "verify"}, {"mechanism_csv", flags.mechanism_csv}});
}

void AddOut(CLI::App* cmd, Flags& f, bool with_format) {
  cmd->add_option("--out", f.out, "Output path (standard output if omitted)");
  if (with_format) {
    cmd->add_option("--format", f.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

void AddMechanism(CLI::App* cmd, Flags& f) {
  cmd->add_option("--family", f.mechanism.family, "laplace, gaussian or circular")
      ->check(CLI::IsMember({"laplace", "gaussian", "circular"}));
  auto* eps = cmd->add_option("--epsilon-inv-km", f.mechanism.epsilon_inv_km,
                              "Laplace epsilon in 1/km");
  auto* sigma = cmd->add_option("--sigma-m", f.mechanism.sigma_m,
                                "Gaussian per-axis sigma in meters");
  auto* radius = cmd->add_option("--radius-m", f.mechanism.radius_m,
                                 "Circular radius in meters");
  auto* qavg = cmd->add_option("--qavg-m", f.mechanism.qavg_m,
                               "Calibrate the scale to this average loss");
  qavg->excludes(eps)->excludes(sigma)->excludes(radius);
}

void AddRemap(CLI::App* cmd, Flags& f) {
  cmd->add_option("--tolerance-m", f.remap.tolerance_m, "Weiszfeld tolerance");
  cmd->add_option("--max-iters", f.remap.max_iters, "Weiszfeld iteration cap");
  cmd->add_option("--weight-floor", f.remap.weight_floor,
                  "Drop cells below this fraction of the top posterior weight");
}

void AddDataset(CLI::App* cmd, Flags& f) {
  cmd->add_option("--checkins", f.dataset.checkins,
                  "Gowalla check-in TSV (default $GEOPRIV_DATA/" +
                      std::string(kDefaultCheckinsFile) + ")");
  cmd->add_option("--region", f.dataset.region,
                  "min_lat,max_lat,min_lon,max_lon (default San Francisco)")
      ->delimiter(',')
      ->expected(4);
  cmd->add_option("--cell-m", f.dataset.cell_m, "Prior grid cell size");
  cmd->add_option("--train-fraction", f.dataset.train_fraction,
                  "Fraction of users used to build the prior");
  cmd->add_option("--smoothing", f.dataset.smoothing,
                  "Pseudo-count added to every prior cell");
  cmd->add_option("--seed", f.seed, "Random seed");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  std::vector<std::string> raw(argv, argv + argc);
  absl::StatusOr<std::vector<std::string>> args = ExpandConfig(std::move(raw));
  if (!args.ok()) {
    err << "error: " << args.status() << "\n";
    return kExitUsage;
  }

  Flags f;
  CLI::App app{"Geo-indistinguishability mechanisms, metrics and experiments",
               "geopriv"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--threads", f.threads, "Worker threads for trial loops")
      ->check(CLI::PositiveNumber);
  app.add_option("--config", f.config, "JSON file with flag values");

  auto* calibrate = app.add_subcommand("calibrate", "Scale for a target average loss");
  AddMechanism(calibrate, f);
  AddOut(calibrate, f, false);

  auto* sample = app.add_subcommand("sample", "Draw obfuscated locations");
  AddMechanism(sample, f);
  AddRemap(sample, f);
  sample->add_option("--x-m", f.x_m, "True location x");
  sample->add_option("--y-m", f.y_m, "True location y");
  sample->add_option("--count", f.count, "Number of samples");
  sample->add_option("--seed", f.seed, "Random seed");
  sample->add_option("--prior-csv", f.prior_csv,
                     "Grid prior from `prior build`; enables remapping");
  AddOut(sample, f, false);

  auto* tradeoff = app.add_subcommand("tradeoff", "Laplace privacy/utility table");
  tradeoff->add_option("--epsilons-inv-km", f.epsilons_inv_km, "Epsilons in 1/km")
      ->delimiter(',');
  tradeoff->add_option("--perr-min", f.perr_min_targets,
                       "Target Perr_min values at r*; epsilon is derived")
      ->delimiter(',');
  tradeoff->add_option("--r-star-m", f.r_star_m, "Privacy radius r*")->required();
  AddOut(tradeoff, f, true);

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
  experiment->require_subcommand(1);
  auto* decision = experiment->add_subcommand("decision", "Decision-adversary error");
  decision->add_option("--families", f.families, "Mechanism families")
      ->delimiter(',')
      ->check(CLI::IsMember({"laplace", "gaussian", "circular"}));
  decision->add_option("--d-m", f.d_m, "Distances between x and x'")
      ->delimiter(',')
      ->required();
  decision->add_option("--qavg-m", f.qavgs_m, "Average losses")
      ->delimiter(',')
      ->required();
  decision->add_option("--trials", f.trials, "Trials per cell");
  decision->add_option("--seed", f.seed, "Random seed");
  decision->add_option("--bins", f.bins, "Histogram bins over [0, 0.5]");
  decision->add_option("--records-out", f.records_out, "Also write every trial");
  decision->add_option("--crossover-out", f.crossover_out,
                       "Also write crossover distances");
  AddOut(decision, f, true);

  auto* gowalla = experiment->add_subcommand("gowalla", "Laplace with remapping on check-ins");
  AddDataset(gowalla, f);
  AddRemap(gowalla, f);
  f.epsilons_inv_km = {6.67, 4, 2, 1};
  gowalla->add_option("--epsilons-inv-km", f.epsilons_inv_km, "Epsilons in 1/km")
      ->delimiter(',');
  gowalla->add_option("--n-checkins", f.n_checkins, "Test check-ins to obfuscate");
  AddOut(gowalla, f, true);

  auto* verify = app.add_subcommand("verify", "Audit a discrete mechanism");
  verify->add_option("--mechanism-csv", f.mechanism_csv, "Mechanism matrix CSV")
      ->required();
  verify->add_option("--prior-csv", f.prior_csv, "Prior rows x_m,y_m,mass");
  verify->add_option("--epsilon-inv-km", f.verify_epsilon_inv_km,
                     "Epsilon to check (default: tightest)");
  AddOut(verify, f, false);

  auto* prior = app.add_subcommand("prior", "Empirical priors");
  prior->require_subcommand(1);
  auto* build = prior->add_subcommand("build", "Build a grid prior from check-ins");
  AddDataset(build, f);
  AddOut(build, f, false);

  std::vector<const char*> cargv;
  for (const std::string& a : *args) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  // A gowalla run restores its own default list; tradeoff must not inherit it.
  if (*tradeoff && tradeoff->count("--epsilons-inv-km") == 0) {
    f.epsilons_inv_km.clear();
  }

  absl::Status status;
  if (*calibrate) {
    if (calibrate->count("--qavg-m") == 0) {
      err << "usage error: calibrate requires --qavg-m\n";
      return kExitUsage;
    }
    status = RunCalibrate(f, out);
  } else if (*sample) {
    status = RunSample(f, out);
  } else if (*tradeoff) {
    status = RunTradeoff(f, out);
  } else if (*decision) {
    status = RunDecision(f, out, err);
  } else if (*gowalla) {
    status = RunGowalla(f, out, err);
  } else if (*verify) {
    status = RunVerify(f, out);
  } else if (*build) {
    status = RunPriorBuild(f, err);
  }
  if (!status.ok()) {
    err << "error: " << status << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace geopriv

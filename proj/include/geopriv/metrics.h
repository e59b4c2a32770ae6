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

#ifndef GEOPRIV_METRICS_H_
#define GEOPRIV_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "geopriv/geo.h"
#include "geopriv/pmf.h"

namespace geopriv {

// Masses or densities at or below this are treated as exact zeros when
// forming log ratios.
inline constexpr double kZeroThreshold = 1e-300;

// sup_s |log(p1(s) / p2(s))| over a shared support, with the conventions that
// a term is 0 when both values are zero and +inf when exactly one is.
// InvalidArgument ("SupportMismatch") if the lengths differ.
absl::StatusOr<double> MultiplicativeDistance(std::span<const double> p1,
                                              std::span<const double> p2);

// Same, for two Pmfs that must list identical locations in the same order.
absl::StatusOr<double> MultiplicativeDistance(const Pmf& p1, const Pmf& p2);

// Privacy level eps * d guaranteed between two points d meters apart.
double EpsilonStar(double epsilon_per_m, double d_m);

// Smallest error of the two-point decision adversary allowed by
// eps-geo-indistinguishability: 1 / (1 + exp(eps * d)).
double PerrMin(double epsilon_per_m, double d_m);

// Error of the optimal decision between x and x' (equal priors) after seeing
// an output with likelihoods f(z|x) and f(z|x'): min / sum, in [0, 0.5].
// InvalidArgument ("BothZero") if both likelihoods are zero.
absl::StatusOr<double> Perr(double f_zx, double f_zx_prime);

// Row-stochastic mechanism f(z|x) over finite input and output alphabets.
class DiscreteMechanism {
 public:
  static constexpr double kRowTolerance = 1e-9;

  // `matrix[i][k]` is f(outputs[k] | inputs[i]).
  static absl::StatusOr<DiscreteMechanism> Create(
      std::vector<PlanarPoint> inputs, std::vector<PlanarPoint> outputs,
      std::vector<std::vector<double>> matrix);

  const std::vector<PlanarPoint>& inputs() const { return inputs_; }
  const std::vector<PlanarPoint>& outputs() const { return outputs_; }
  const std::vector<double>& row(size_t input) const { return matrix_[input]; }
  double at(size_t input, size_t output) const {
    return matrix_[input][output];
  }
  size_t num_inputs() const { return inputs_.size(); }
  size_t num_outputs() const { return outputs_.size(); }

 private:
  DiscreteMechanism(std::vector<PlanarPoint> inputs,
                    std::vector<PlanarPoint> outputs,
                    std::vector<std::vector<double>> matrix)
      : inputs_(std::move(inputs)),
        outputs_(std::move(outputs)),
        matrix_(std::move(matrix)) {}

  std::vector<PlanarPoint> inputs_;
  std::vector<PlanarPoint> outputs_;
  std::vector<std::vector<double>> matrix_;
};

// Bayesian update p(x|z) over the prior's support. Every prior location must
// be one of the mechanism inputs (InvalidArgument otherwise); FailedPrecondition
// ("ZeroEvidence") if the output is impossible under the prior.
absl::StatusOr<Pmf> Posterior(const Pmf& prior, const DiscreteMechanism& mech,
                              size_t output_index);

// Largest distance between two positive-mass support points.
double PriorDiameter(const Pmf& prior);

// Smallest eps for which the mechanism is eps-geo-indistinguishable: the max
// over input pairs of d_M(row x, row x') / d(x, x'). May be +inf. Requires at
// least two inputs at pairwise positive distance.
absl::StatusOr<double> TightestEpsilon(const DiscreteMechanism& mech);

// d_M(f(.|x), f(.|x')) <= eps * d(x, x') for every input pair.
bool SatisfiesGeoInd(const DiscreteMechanism& mech, double epsilon_per_m);

// Perr(x, x', z) >= PerrMin(eps, d(x, x')) for every input pair and every
// output with a nonzero likelihood under either input.
bool SatisfiesPerrBound(const DiscreteMechanism& mech, double epsilon_per_m);

struct PosteriorBoundReport {
  bool holds = true;
  // Output with the smallest slack eps * d(prior) - d_M(posterior, prior);
  // -1 when no output had positive evidence.
  int64_t worst_output = -1;
  double worst_gap = 0.0;
  double bound = 0.0;
  int64_t outputs_checked = 0;
  int64_t outputs_skipped = 0;
};

// Checks d_M(p(.|z), prior) <= eps * d(prior) + 1e-9 for every output z with
// positive evidence, comparing on the prior's support. Outputs with zero
// evidence are skipped.
absl::StatusOr<PosteriorBoundReport> PosteriorBoundHolds(
    const Pmf& prior, const DiscreteMechanism& mech, double epsilon_per_m);

// CSV form of a DiscreteMechanism. The header is "x_m,y_m" followed by one
// "<zx>:<zy>" column per output location; each following row holds an input's
// x and y in meters and then its f(z|x) entries.
absl::StatusOr<DiscreteMechanism> ReadDiscreteMechanismCsv(
    const std::string& path);
absl::Status WriteDiscreteMechanismCsv(const DiscreteMechanism& mech,
                                       const std::string& path);

// Reads a prior as CSV rows "x_m,y_m,mass" with a header line.
absl::StatusOr<Pmf> ReadPointPmfCsv(const std::string& path);

}  // namespace geopriv

#endif  // GEOPRIV_METRICS_H_

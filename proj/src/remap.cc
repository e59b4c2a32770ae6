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

#include "geopriv/remap.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"

namespace geopriv {

RemappedMechanism::RemappedMechanism(MechanismParams base, Grid grid,
                                     std::vector<PlanarPoint> support,
                                     std::vector<double> mass,
                                     RemapOptions options)
    : base_(base),
      grid_(grid),
      support_(std::move(support)),
      mass_(std::move(mass)),
      options_(options) {
  log_mass_.reserve(mass_.size());
  for (double m : mass_) log_mass_.push_back(std::log(m));
}

absl::StatusOr<RemappedMechanism> RemappedMechanism::Create(
    MechanismParams base, Grid grid, Pmf prior, RemapOptions options) {
  if (base.family() != Family::kLaplace) {
    return absl::InvalidArgumentError("remapping requires a Laplace base");
  }
  if (!(options.relative_weight_floor >= 0.0 &&
        options.relative_weight_floor < 1.0)) {
    return absl::InvalidArgumentError("relative_weight_floor not in [0, 1)");
  }
  if (!(options.weiszfeld.tolerance > 0.0) ||
      options.weiszfeld.max_iterations < 1) {
    return absl::InvalidArgumentError("invalid Weiszfeld options");
  }
  std::vector<PlanarPoint> support;
  std::vector<double> mass;
  for (const PmfAtom& a : prior.atoms()) {
    if (a.mass > 0.0) {
      support.push_back(a.location);
      mass.push_back(a.mass);
    }
  }
  if (support.empty()) {
    return absl::FailedPreconditionError("DegeneratePrior: no positive mass");
  }
  return RemappedMechanism(base, grid, std::move(support), std::move(mass),
                           options);
}

absl::StatusOr<std::vector<double>> RemappedMechanism::Posterior(
    const PlanarPoint& z_prime) const {
  if (!std::isfinite(z_prime.x) || !std::isfinite(z_prime.y)) {
    return absl::FailedPreconditionError("DegeneratePrior: z' not finite");
  }
  // Work in log space: log prior - eps * d. The normalizing constant of the
  // Laplace density cancels.
  const double eps = base_.scale();
  std::vector<double> w(support_.size());
  double max_log = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < support_.size(); ++i) {
    w[i] = log_mass_[i] - eps * Distance(z_prime, support_[i]);
    max_log = std::max(max_log, w[i]);
  }
  if (!std::isfinite(max_log)) {
    return absl::FailedPreconditionError("DegeneratePrior: posterior is zero");
  }
  const double log_floor = options_.relative_weight_floor > 0.0
                               ? std::log(options_.relative_weight_floor)
                               : -std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (double& v : w) {
    const double rel = v - max_log;
    v = rel < log_floor ? 0.0 : std::exp(rel);
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

absl::StatusOr<PlanarPoint> RemappedMechanism::Remap(
    const PlanarPoint& z_prime) const {
  absl::StatusOr<std::vector<double>> post = Posterior(z_prime);
  if (!post.ok()) return post.status();
  absl::StatusOr<GeometricMedianResult> median =
      GeometricMedian(support_, *post, options_.weiszfeld);
  if (!median.ok()) return median.status();
  return median->point;
}

PlanarPoint RemappedMechanism::RemappedSample(const PlanarPoint& x,
                                              RandomStream& rnd) const {
  const PlanarPoint z_prime = Sample(base_, x, rnd);
  absl::StatusOr<PlanarPoint> z = Remap(z_prime);
  return z.ok() ? *z : z_prime;
}

}  // namespace geopriv

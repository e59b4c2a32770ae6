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

#ifndef GEOPRIV_REMAP_H_
#define GEOPRIV_REMAP_H_

#include <vector>

#include "absl/status/statusor.h"
#include "geopriv/geo.h"
#include "geopriv/geometric_median.h"
#include "geopriv/mechanisms.h"
#include "geopriv/pmf.h"
#include "geopriv/random.h"

namespace geopriv {

struct RemapOptions {
  WeiszfeldOptions weiszfeld;
  // Prior cells whose posterior weight falls below this fraction of the
  // largest posterior weight are left out of the median. 0 keeps every cell.
  double relative_weight_floor = 1e-12;
};

// Planar Laplace followed by a deterministic remap of the noisy point z' to
// the geometric median of the posterior over the prior's cells. The remap
// sees only z' and the prior, so it is post-processing and preserves the
// base mechanism's geo-indistinguishability.
class RemappedMechanism {
 public:
  // `base` must be Laplace. Atoms of `prior` with zero mass are dropped; at
  // least one must be positive.
  static absl::StatusOr<RemappedMechanism> Create(MechanismParams base,
                                                  Grid grid, Pmf prior,
                                                  RemapOptions options = {});

  const MechanismParams& base() const { return base_; }
  const Grid& grid() const { return grid_; }
  const RemapOptions& options() const { return options_; }
  const std::vector<PlanarPoint>& support() const { return support_; }
  const std::vector<double>& prior_mass() const { return mass_; }

  // Posterior weights p(c_i | z') over support(), normalized.
  // FailedPrecondition ("DegeneratePrior") if no cell keeps positive weight.
  absl::StatusOr<std::vector<double>> Posterior(const PlanarPoint& z_prime) const;

  // Geometric median of the posterior. Errors as Posterior().
  absl::StatusOr<PlanarPoint> Remap(const PlanarPoint& z_prime) const;

  // Remap(Sample(base, x)); falls back to z' on DegeneratePrior.
  PlanarPoint RemappedSample(const PlanarPoint& x, RandomStream& rnd) const;

 private:
  RemappedMechanism(MechanismParams base, Grid grid,
                    std::vector<PlanarPoint> support, std::vector<double> mass,
                    RemapOptions options);

  MechanismParams base_;
  Grid grid_;
  std::vector<PlanarPoint> support_;
  std::vector<double> mass_;
  std::vector<double> log_mass_;
  RemapOptions options_;
};

}  // namespace geopriv

#endif  // GEOPRIV_REMAP_H_

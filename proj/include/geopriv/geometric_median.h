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

#ifndef GEOPRIV_GEOMETRIC_MEDIAN_H_
#define GEOPRIV_GEOMETRIC_MEDIAN_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "geopriv/geo.h"

namespace geopriv {

struct WeiszfeldOptions {
  // Stop once an update moves the iterate by at most this many meters. Also
  // the radius within which the iterate is considered to sit on an anchor.
  double tolerance = 1e-3;
  int max_iterations = 200;
};

struct GeometricMedianResult {
  PlanarPoint point;
  // Weighted distance sum at `point`, weights normalized to sum to 1.
  double objective = 0.0;
  int iterations = 0;
  // Objective at the start point and after every accepted update.
  std::vector<double> objective_trace;
};

// sum_i w_i * ||a_i - z||.
double WeightedDistanceSum(std::span<const PlanarPoint> anchors,
                           std::span<const double> weights,
                           const PlanarPoint& z);

// Weighted geometric median by Weiszfeld iteration started at the weighted
// mean. When the iterate comes within `tolerance` of an anchor a_j, the anchor
// is tested for optimality (||R_j|| <= w_j, R_j the resultant of unit pulls
// from the other anchors) and returned if optimal; otherwise the iterate
// leaves it along R_j with the step (||R_j|| - w_j) / L_j. The objective is
// non-increasing along the returned trace.
//
// Fails with InvalidArgument on size mismatch, negative weights or zero
// total weight.
absl::StatusOr<GeometricMedianResult> GeometricMedian(
    std::span<const PlanarPoint> anchors, std::span<const double> weights,
    const WeiszfeldOptions& options = {}, bool record_trace = false);

}  // namespace geopriv

#endif  // GEOPRIV_GEOMETRIC_MEDIAN_H_

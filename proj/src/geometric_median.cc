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

#include "geopriv/geometric_median.h"

#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"

namespace geopriv {

namespace {

struct AnchorSet {
  std::vector<PlanarPoint> points;
  std::vector<double> weights;  // normalized
};

// Step from anchor j: either {anchor, true} when the anchor is optimal, or
// the Vardi-Zhang style exit point.
struct AnchorTest {
  PlanarPoint next;
  bool optimal;
};

AnchorTest TestAnchor(const AnchorSet& set, size_t j) {
  const PlanarPoint& aj = set.points[j];
  double rx = 0.0, ry = 0.0, l = 0.0;
  for (size_t i = 0; i < set.points.size(); ++i) {
    if (i == j) continue;
    const double dx = set.points[i].x - aj.x;
    const double dy = set.points[i].y - aj.y;
    const double d = std::sqrt(dx * dx + dy * dy);
    if (d == 0.0) continue;
    const double c = set.weights[i] / d;
    rx += c * dx;
    ry += c * dy;
    l += c;
  }
  const double rnorm = std::sqrt(rx * rx + ry * ry);
  if (rnorm <= set.weights[j] || l == 0.0) return {aj, true};
  const double t = (rnorm - set.weights[j]) / l;
  return {PlanarPoint{aj.x + t * rx / rnorm, aj.y + t * ry / rnorm}, false};
}

}  // namespace

double WeightedDistanceSum(std::span<const PlanarPoint> anchors,
                           std::span<const double> weights,
                           const PlanarPoint& z) {
  double sum = 0.0;
  for (size_t i = 0; i < anchors.size(); ++i) {
    sum += weights[i] * Distance(anchors[i], z);
  }
  return sum;
}

absl::StatusOr<GeometricMedianResult> GeometricMedian(
    std::span<const PlanarPoint> anchors, std::span<const double> weights,
    const WeiszfeldOptions& options, bool record_trace) {
  if (anchors.size() != weights.size()) {
    return absl::InvalidArgumentError("anchor and weight counts differ");
  }
  if (!(options.tolerance > 0.0) || options.max_iterations < 1) {
    return absl::InvalidArgumentError("invalid Weiszfeld options");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      return absl::InvalidArgumentError("weights must be finite and >= 0");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    return absl::InvalidArgumentError("weights sum to zero");
  }

  AnchorSet set;
  set.points.reserve(anchors.size());
  set.weights.reserve(anchors.size());
  PlanarPoint x{0.0, 0.0};
  for (size_t i = 0; i < anchors.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const double w = weights[i] / total;
    set.points.push_back(anchors[i]);
    set.weights.push_back(w);
    x.x += w * anchors[i].x;
    x.y += w * anchors[i].y;
  }

  GeometricMedianResult result;
  if (set.points.size() == 1) {
    result.point = set.points.front();
    if (record_trace) result.objective_trace.push_back(0.0);
    return result;
  }

  double fx = WeightedDistanceSum(set.points, set.weights, x);
  if (record_trace) result.objective_trace.push_back(fx);

  // Whether an anchor is optimal does not depend on the iterate, so each
  // anchor is tested at most once, when it first becomes the nearest one.
  // This catches minimizers at an anchor, where plain Weiszfeld crawls.
  const size_t n = set.points.size();
  std::vector<bool> tested(n, false);
  for (int it = 0; it < options.max_iterations; ++it) {
    double sw = 0.0, sx = 0.0, sy = 0.0;
    size_t nearest = 0;
    double nearest_distance = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      const double dx = set.points[i].x - x.x;
      const double dy = set.points[i].y - x.y;
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d < nearest_distance) {
        nearest_distance = d;
        nearest = i;
      }
      if (d == 0.0) continue;
      const double c = set.weights[i] / d;
      sw += c;
      sx += c * set.points[i].x;
      sy += c * set.points[i].y;
    }

    PlanarPoint next;
    bool stop_after = false;
    const bool near_anchor = nearest_distance < options.tolerance;
    if (!tested[nearest] || near_anchor) {
      tested[nearest] = true;
      const AnchorTest test = TestAnchor(set, nearest);
      if (test.optimal) {
        next = test.next;
        stop_after = true;
      } else if (near_anchor) {
        next = test.next;
      } else {
        next = PlanarPoint{sx / sw, sy / sw};
      }
    } else {
      next = PlanarPoint{sx / sw, sy / sw};
    }

    const double fnext = WeightedDistanceSum(set.points, set.weights, next);
    if (fnext > fx) break;  // snapping to an anchor cost more than it saved
    const double step = Distance(next, x);
    x = next;
    fx = fnext;
    result.iterations = it + 1;
    if (record_trace) result.objective_trace.push_back(fx);
    if (stop_after || step <= options.tolerance) break;
  }

  result.point = x;
  result.objective = fx;
  return result;
}

}  // namespace geopriv

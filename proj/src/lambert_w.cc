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

#include "geopriv/lambert_w.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace geopriv {

namespace {

constexpr double kMinusInvE = -1.0 / std::numbers::e;
constexpr int kMaxIterations = 64;

double InitialGuess(double y) {
  // Near the branch point use the series in p = -sqrt(2 (1 + e y)).
  const double q = 1.0 + std::numbers::e * y;
  if (q < 0.25) {
    const double p = -std::sqrt(2.0 * std::max(q, 0.0));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  // Asymptotic form for y -> 0^-.
  const double l1 = std::log(-y);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

absl::StatusOr<double> LambertWMinus1(double y) {
  // Allow a rounding ulp below -1/e so that (p - 1) / e at p == 0 is accepted.
  if (!(y >= kMinusInvE - 1e-17 && y < 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("DomainError: W_{-1} undefined at ", y));
  }
  if (y <= kMinusInvE) return -1.0;

  double w = std::min(InitialGuess(y), -1.0);
  // Iterate to a fixed point rather than stopping on the residual: near the
  // branch point w e^w is flat, so a small residual does not imply a small
  // error in w.
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - y;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    // Halley step.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    double next = w - f / denom;
    if (!std::isfinite(next) || next > -1.0) next = 0.5 * (w - 1.0);
    const double step = std::abs(next - w);
    w = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) {
      break;
    }
  }
  return w;
}

}  // namespace geopriv

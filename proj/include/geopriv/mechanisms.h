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

#ifndef GEOPRIV_MECHANISMS_H_
#define GEOPRIV_MECHANISMS_H_

#include <string>
#include <string_view>
#include <variant>

#include "absl/status/statusor.h"
#include "geopriv/geo.h"
#include "geopriv/random.h"

namespace geopriv {

// Isotropic noise families. Every family adds noise (r cos t, r sin t) with
// t uniform and r drawn from a family-specific radial law.
enum class Family { kLaplace, kGaussian, kCircular };

std::string_view FamilyName(Family family);
absl::StatusOr<Family> ParseFamily(std::string_view name);

// Planar Laplace: density (eps^2 / 2 pi) exp(-eps r). `epsilon` is per meter.
struct LaplaceNoise {
  double epsilon;
};

// Isotropic Gaussian with per-axis standard deviation `sigma` meters.
struct GaussianNoise {
  double sigma;
};

// Uniform on the disc of radius `radius` meters.
struct CircularNoise {
  double radius;
};

// Parameters of one noise mechanism. The scale is always positive and finite.
class MechanismParams {
 public:
  using Variant = std::variant<LaplaceNoise, GaussianNoise, CircularNoise>;

  static absl::StatusOr<MechanismParams> Laplace(double epsilon_per_m);
  static absl::StatusOr<MechanismParams> Gaussian(double sigma_m);
  static absl::StatusOr<MechanismParams> Circular(double radius_m);
  // Dispatches on `family`; `scale` is epsilon (1/m), sigma (m) or radius (m).
  static absl::StatusOr<MechanismParams> Create(Family family, double scale);

  Family family() const;
  double scale() const;
  const Variant& noise() const { return noise_; }

 private:
  explicit MechanismParams(Variant noise) : noise_(noise) {}

  Variant noise_;
};

// Inverse of the radial CDF at probability `p` in [0, 1). For Laplace this is
// -(1/eps) (W_{-1}((p - 1)/e) + 1).
double RadialQuantile(const MechanismParams& params, double p);

// P(||noise|| <= r).
double RadialCdf(const MechanismParams& params, double r);

// Draws z = x + noise.
PlanarPoint Sample(const MechanismParams& params, const PlanarPoint& x,
                   RandomStream& rnd);

// Conditional density f(z | x) per square meter.
double Density(const MechanismParams& params, const PlanarPoint& z,
               const PlanarPoint& x);

// Expected Euclidean loss E||z - x||.
double AnalyticQavg(const MechanismParams& params);

// Radius containing the output with probability 0.95.
double AnalyticR95(const MechanismParams& params);

// Scale giving the requested expected loss. InvalidArgument
// ("InvalidUtility") unless qavg_m > 0.
absl::StatusOr<MechanismParams> CalibrateToQavg(Family family, double qavg_m);

}  // namespace geopriv

#endif  // GEOPRIV_MECHANISMS_H_

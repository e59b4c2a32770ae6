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

#include "geopriv/mechanisms.h"

#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "geopriv/lambert_w.h"

namespace geopriv {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

absl::Status CheckScale(double scale, std::string_view what) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(what), " must be positive and finite, got ", scale));
  }
  return absl::OkStatus();
}

double LaplaceQuantile(double epsilon, double p) {
  // LambertWMinus1 only fails outside [-1/e, 0), which p in [0, 1) excludes.
  const double w = *LambertWMinus1((p - 1.0) / std::numbers::e);
  return -(w + 1.0) / epsilon;
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kLaplace:
      return "laplace";
    case Family::kGaussian:
      return "gaussian";
    case Family::kCircular:
      return "circular";
  }
  return "unknown";
}

absl::StatusOr<Family> ParseFamily(std::string_view name) {
  if (name == "laplace") return Family::kLaplace;
  if (name == "gaussian") return Family::kGaussian;
  if (name == "circular") return Family::kCircular;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mechanism family '", std::string(name), "'"));
}

absl::StatusOr<MechanismParams> MechanismParams::Laplace(double epsilon_per_m) {
  if (auto s = CheckScale(epsilon_per_m, "epsilon"); !s.ok()) return s;
  return MechanismParams(LaplaceNoise{epsilon_per_m});
}

absl::StatusOr<MechanismParams> MechanismParams::Gaussian(double sigma_m) {
  if (auto s = CheckScale(sigma_m, "sigma"); !s.ok()) return s;
  return MechanismParams(GaussianNoise{sigma_m});
}

absl::StatusOr<MechanismParams> MechanismParams::Circular(double radius_m) {
  if (auto s = CheckScale(radius_m, "radius"); !s.ok()) return s;
  return MechanismParams(CircularNoise{radius_m});
}

absl::StatusOr<MechanismParams> MechanismParams::Create(Family family,
                                                        double scale) {
  switch (family) {
    case Family::kLaplace:
      return Laplace(scale);
    case Family::kGaussian:
      return Gaussian(scale);
    case Family::kCircular:
      return Circular(scale);
  }
  return absl::InvalidArgumentError("unknown family");
}

Family MechanismParams::family() const {
  return std::visit(Overloaded{
                        [](const LaplaceNoise&) { return Family::kLaplace; },
                        [](const GaussianNoise&) { return Family::kGaussian; },
                        [](const CircularNoise&) { return Family::kCircular; },
                    },
                    noise_);
}

double MechanismParams::scale() const {
  return std::visit(Overloaded{
                        [](const LaplaceNoise& n) { return n.epsilon; },
                        [](const GaussianNoise& n) { return n.sigma; },
                        [](const CircularNoise& n) { return n.radius; },
                    },
                    noise_);
}

double RadialQuantile(const MechanismParams& params, double p) {
  return std::visit(
      Overloaded{
          [p](const LaplaceNoise& n) { return LaplaceQuantile(n.epsilon, p); },
          // Rayleigh inverse CDF.
          [p](const GaussianNoise& n) {
            return n.sigma * std::sqrt(-2.0 * std::log1p(-p));
          },
          [p](const CircularNoise& n) { return n.radius * std::sqrt(p); },
      },
      params.noise());
}

double RadialCdf(const MechanismParams& params, double r) {
  if (r <= 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [r](const LaplaceNoise& n) {
            const double er = n.epsilon * r;
            return 1.0 - (1.0 + er) * std::exp(-er);
          },
          [r](const GaussianNoise& n) {
            return -std::expm1(-r * r / (2.0 * n.sigma * n.sigma));
          },
          [r](const CircularNoise& n) {
            return r >= n.radius ? 1.0 : (r * r) / (n.radius * n.radius);
          },
      },
      params.noise());
}

PlanarPoint Sample(const MechanismParams& params, const PlanarPoint& x,
                   RandomStream& rnd) {
  const double theta = 2.0 * kPi * rnd.Uniform01();
  const double r = RadialQuantile(params, rnd.Uniform01());
  return PlanarPoint{x.x + r * std::cos(theta), x.y + r * std::sin(theta)};
}

double Density(const MechanismParams& params, const PlanarPoint& z,
               const PlanarPoint& x) {
  const double d = Distance(z, x);
  return std::visit(
      Overloaded{
          [d](const LaplaceNoise& n) {
            return n.epsilon * n.epsilon / (2.0 * kPi) *
                   std::exp(-n.epsilon * d);
          },
          [d](const GaussianNoise& n) {
            const double s2 = n.sigma * n.sigma;
            return std::exp(-d * d / (2.0 * s2)) / (2.0 * kPi * s2);
          },
          [d](const CircularNoise& n) {
            return d <= n.radius ? 1.0 / (kPi * n.radius * n.radius) : 0.0;
          },
      },
      params.noise());
}

double AnalyticQavg(const MechanismParams& params) {
  return std::visit(
      Overloaded{
          [](const LaplaceNoise& n) { return 2.0 / n.epsilon; },
          [](const GaussianNoise& n) { return n.sigma * std::sqrt(kPi / 2.0); },
          [](const CircularNoise& n) { return 2.0 * n.radius / 3.0; },
      },
      params.noise());
}

double AnalyticR95(const MechanismParams& params) {
  return RadialQuantile(params, 0.95);
}

absl::StatusOr<MechanismParams> CalibrateToQavg(Family family, double qavg_m) {
  if (!(qavg_m > 0.0) || !std::isfinite(qavg_m)) {
    return absl::InvalidArgumentError(
        absl::StrCat("InvalidUtility: average loss must be positive, got ",
                     qavg_m));
  }
  switch (family) {
    case Family::kLaplace:
      return MechanismParams::Laplace(2.0 / qavg_m);
    case Family::kGaussian:
      return MechanismParams::Gaussian(qavg_m / std::sqrt(kPi / 2.0));
    case Family::kCircular:
      return MechanismParams::Circular(3.0 * qavg_m / 2.0);
  }
  return absl::InvalidArgumentError("unknown family");
}

}  // namespace geopriv

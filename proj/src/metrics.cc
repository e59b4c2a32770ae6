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

#include "geopriv/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace geopriv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |log(a / b)| with the zero conventions.
double AbsLogRatio(double a, double b) {
  const bool za = a <= kZeroThreshold;
  const bool zb = b <= kZeroThreshold;
  if (za && zb) return 0.0;
  if (za || zb) return kInf;
  return std::abs(std::log(a) - std::log(b));
}

}  // namespace

absl::StatusOr<double> MultiplicativeDistance(std::span<const double> p1,
                                              std::span<const double> p2) {
  if (p1.size() != p2.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "SupportMismatch: ", p1.size(), " vs ", p2.size(), " entries"));
  }
  double sup = 0.0;
  for (size_t i = 0; i < p1.size(); ++i) {
    sup = std::max(sup, AbsLogRatio(p1[i], p2[i]));
  }
  return sup;
}

absl::StatusOr<double> MultiplicativeDistance(const Pmf& p1, const Pmf& p2) {
  if (p1.size() != p2.size()) {
    return absl::InvalidArgumentError("SupportMismatch: sizes differ");
  }
  for (size_t i = 0; i < p1.size(); ++i) {
    if (!(p1.atoms()[i].location == p2.atoms()[i].location)) {
      return absl::InvalidArgumentError(
          absl::StrCat("SupportMismatch: entry ", i, " differs"));
    }
  }
  const std::vector<double> m1 = p1.masses();
  const std::vector<double> m2 = p2.masses();
  return MultiplicativeDistance(m1, m2);
}

double EpsilonStar(double epsilon_per_m, double d_m) {
  return epsilon_per_m * d_m;
}

double PerrMin(double epsilon_per_m, double d_m) {
  return 1.0 / (1.0 + std::exp(epsilon_per_m * d_m));
}

absl::StatusOr<double> Perr(double f_zx, double f_zx_prime) {
  if (!(f_zx >= 0.0) || !(f_zx_prime >= 0.0)) {
    return absl::InvalidArgumentError("likelihoods must be non-negative");
  }
  if (f_zx == 0.0 && f_zx_prime == 0.0) {
    return absl::InvalidArgumentError("BothZero: output impossible under both");
  }
  // Divide through by the larger value so huge likelihoods cannot overflow
  // the sum.
  const double hi = std::max(f_zx, f_zx_prime);
  const double lo = std::min(f_zx, f_zx_prime) / hi;
  return lo / (1.0 + lo);
}

absl::StatusOr<DiscreteMechanism> DiscreteMechanism::Create(
    std::vector<PlanarPoint> inputs, std::vector<PlanarPoint> outputs,
    std::vector<std::vector<double>> matrix) {
  if (inputs.empty() || outputs.empty()) {
    return absl::InvalidArgumentError("mechanism alphabets must be nonempty");
  }
  if (matrix.size() != inputs.size()) {
    return absl::InvalidArgumentError("one matrix row per input required");
  }
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != outputs.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has ", matrix[i].size(), " entries, expected ",
                       outputs.size()));
    }
    double sum = 0.0;
    for (double v : matrix[i]) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", i, " has an invalid entry ", v));
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowTolerance) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " sums to ", sum, ", expected 1"));
    }
  }
  return DiscreteMechanism(std::move(inputs), std::move(outputs),
                           std::move(matrix));
}

absl::StatusOr<Pmf> Posterior(const Pmf& prior, const DiscreteMechanism& mech,
                              size_t output_index) {
  if (output_index >= mech.num_outputs()) {
    return absl::OutOfRangeError(
        absl::StrCat("output index ", output_index, " out of range"));
  }
  std::vector<PmfAtom> atoms = prior.atoms();
  double evidence = 0.0;
  for (PmfAtom& a : atoms) {
    const auto it =
        std::find(mech.inputs().begin(), mech.inputs().end(), a.location);
    if (it == mech.inputs().end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "prior location (", a.location.x, ", ", a.location.y,
          ") is not a mechanism input"));
    }
    const size_t row = static_cast<size_t>(it - mech.inputs().begin());
    a.mass *= mech.at(row, output_index);
    evidence += a.mass;
  }
  if (!(evidence > 0.0)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "ZeroEvidence: output ", output_index, " impossible under the prior"));
  }
  for (PmfAtom& a : atoms) a.mass /= evidence;
  return Pmf::Create(std::move(atoms));
}

double PriorDiameter(const Pmf& prior) {
  double diameter = 0.0;
  const auto& atoms = prior.atoms();
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (!(atoms[i].mass > 0.0)) continue;
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      if (!(atoms[j].mass > 0.0)) continue;
      diameter = std::max(diameter, Distance(atoms[i].location, atoms[j].location));
    }
  }
  return diameter;
}

absl::StatusOr<double> TightestEpsilon(const DiscreteMechanism& mech) {
  if (mech.num_inputs() < 2) {
    return absl::InvalidArgumentError("need at least two inputs");
  }
  double eps = 0.0;
  for (size_t i = 0; i < mech.num_inputs(); ++i) {
    for (size_t j = i + 1; j < mech.num_inputs(); ++j) {
      const double d = Distance(mech.inputs()[i], mech.inputs()[j]);
      if (!(d > 0.0)) {
        return absl::InvalidArgumentError(
            absl::StrCat("inputs ", i, " and ", j, " coincide"));
      }
      const double dm = *MultiplicativeDistance(mech.row(i), mech.row(j));
      eps = std::max(eps, dm / d);
    }
  }
  return eps;
}

bool SatisfiesGeoInd(const DiscreteMechanism& mech, double epsilon_per_m) {
  for (size_t i = 0; i < mech.num_inputs(); ++i) {
    for (size_t j = i + 1; j < mech.num_inputs(); ++j) {
      const double d = Distance(mech.inputs()[i], mech.inputs()[j]);
      const double dm = *MultiplicativeDistance(mech.row(i), mech.row(j));
      if (dm > epsilon_per_m * d) return false;
    }
  }
  return true;
}

bool SatisfiesPerrBound(const DiscreteMechanism& mech, double epsilon_per_m) {
  for (size_t i = 0; i < mech.num_inputs(); ++i) {
    for (size_t j = i + 1; j < mech.num_inputs(); ++j) {
      const double d = Distance(mech.inputs()[i], mech.inputs()[j]);
      const double floor = PerrMin(epsilon_per_m, d);
      for (size_t k = 0; k < mech.num_outputs(); ++k) {
        const double a = mech.at(i, k);
        const double b = mech.at(j, k);
        if (a <= kZeroThreshold && b <= kZeroThreshold) continue;
        if (*Perr(a, b) < floor) return false;
      }
    }
  }
  return true;
}

absl::StatusOr<PosteriorBoundReport> PosteriorBoundHolds(
    const Pmf& prior, const DiscreteMechanism& mech, double epsilon_per_m) {
  PosteriorBoundReport report;
  report.bound = epsilon_per_m * PriorDiameter(prior);
  report.worst_gap = kInf;
  for (size_t k = 0; k < mech.num_outputs(); ++k) {
    absl::StatusOr<Pmf> post = Posterior(prior, mech, k);
    if (absl::IsFailedPrecondition(post.status())) {
      ++report.outputs_skipped;
      continue;
    }
    if (!post.ok()) return post.status();
    const double dm = *MultiplicativeDistance(*post, prior);
    const double gap = report.bound - dm;
    ++report.outputs_checked;
    if (gap < report.worst_gap) {
      report.worst_gap = gap;
      report.worst_output = static_cast<int64_t>(k);
    }
    if (dm > report.bound + 1e-9) report.holds = false;
  }
  if (report.outputs_checked == 0) report.worst_gap = 0.0;
  return report;
}

}  // namespace geopriv

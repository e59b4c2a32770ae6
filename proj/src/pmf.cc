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

#include "geopriv/pmf.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace geopriv {

namespace {

absl::Status CheckAtoms(const std::vector<PmfAtom>& atoms) {
  if (atoms.empty()) return absl::InvalidArgumentError("empty Pmf support");
  for (const PmfAtom& a : atoms) {
    if (!(a.mass >= 0.0) || !std::isfinite(a.mass)) {
      return absl::InvalidArgumentError(
          absl::StrCat("Pmf mass must be finite and non-negative, got ",
                       a.mass));
    }
    if (!std::isfinite(a.location.x) || !std::isfinite(a.location.y)) {
      return absl::InvalidArgumentError("Pmf location must be finite");
    }
  }
  std::vector<std::pair<double, double>> keys;
  keys.reserve(atoms.size());
  for (const PmfAtom& a : atoms) keys.emplace_back(a.location.x, a.location.y);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    return absl::InvalidArgumentError("Pmf support entries must be distinct");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Pmf> Pmf::Create(std::vector<PmfAtom> atoms) {
  if (auto s = CheckAtoms(atoms); !s.ok()) return s;
  double total = 0.0;
  for (const PmfAtom& a : atoms) total += a.mass;
  if (std::abs(total - 1.0) > kSumTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("Pmf masses sum to ", total, ", expected 1"));
  }
  return Pmf(std::move(atoms));
}

absl::StatusOr<Pmf> Pmf::FromWeights(std::vector<PmfAtom> atoms) {
  if (auto s = CheckAtoms(atoms); !s.ok()) return s;
  double total = 0.0;
  for (const PmfAtom& a : atoms) total += a.mass;
  if (!(total > 0.0)) {
    return absl::InvalidArgumentError("Pmf weights sum to zero");
  }
  for (PmfAtom& a : atoms) a.mass /= total;
  return Pmf(std::move(atoms));
}

std::vector<double> Pmf::masses() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const PmfAtom& a : atoms_) out.push_back(a.mass);
  return out;
}

}  // namespace geopriv

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

#ifndef GEOPRIV_PMF_H_
#define GEOPRIV_PMF_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "geopriv/geo.h"

namespace geopriv {

// One support point of a Pmf. `cell` is the grid cell index when the support
// is a grid (location is then the cell center), or -1.
struct PmfAtom {
  PlanarPoint location;
  double mass = 0.0;
  int64_t cell = -1;
};

// Finite probability mass function over planar locations. Masses are
// non-negative and sum to 1 within 1e-9; support locations are distinct.
class Pmf {
 public:
  static constexpr double kSumTolerance = 1e-9;

  static absl::StatusOr<Pmf> Create(std::vector<PmfAtom> atoms);

  // Normalizes non-negative weights; fails if they sum to zero.
  static absl::StatusOr<Pmf> FromWeights(std::vector<PmfAtom> atoms);

  const std::vector<PmfAtom>& atoms() const { return atoms_; }
  size_t size() const { return atoms_.size(); }
  std::vector<double> masses() const;

 private:
  explicit Pmf(std::vector<PmfAtom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<PmfAtom> atoms_;
};

}  // namespace geopriv

#endif  // GEOPRIV_PMF_H_

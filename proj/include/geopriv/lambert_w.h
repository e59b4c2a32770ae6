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

#ifndef GEOPRIV_LAMBERT_W_H_
#define GEOPRIV_LAMBERT_W_H_

#include "absl/status/statusor.h"

namespace geopriv {

// Lower real branch W_{-1} of the Lambert W function: the solution w <= -1 of
// w * exp(w) = y for y in [-1/e, 0). Refined by Halley iteration until the
// residual |w e^w - y| is below 1e-12 absolute, or 1e-12 relative to |y|
// when |y| is small. Returns InvalidArgument ("DomainError") outside the
// domain.
absl::StatusOr<double> LambertWMinus1(double y);

}  // namespace geopriv

#endif  // GEOPRIV_LAMBERT_W_H_

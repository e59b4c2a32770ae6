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

#ifndef GEOPRIV_IO_UTIL_H_
#define GEOPRIV_IO_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace geopriv {

// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite.
std::string FormatDouble(double v);

absl::StatusOr<double> ParseDouble(std::string_view s);
absl::StatusOr<int64_t> ParseInt64(std::string_view s);

std::vector<std::string_view> SplitFields(std::string_view line, char sep);

absl::StatusOr<std::string> ReadFile(const std::string& path);

// Writes to "<path>.tmp.<pid>" and renames over `path`, so a failed run never
// leaves a partial file behind. Errors are Unavailable ("IoError").
absl::Status WriteFileAtomic(const std::string& path,
                             std::string_view contents);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string Fnv1a64Hex(std::string_view data);

// Same digest, streamed from a file.
absl::StatusOr<std::string> Fnv1a64FileHex(const std::string& path);

}  // namespace geopriv

#endif  // GEOPRIV_IO_UTIL_H_

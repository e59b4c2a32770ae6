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

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "geopriv/io_util.h"
#include "geopriv/metrics.h"

namespace geopriv {

namespace {

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : SplitFields(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

absl::Status LineError(const std::string& path, size_t line,
                       const absl::Status& cause) {
  return absl::InvalidArgumentError(
      absl::StrCat(path, ":", line, ": ", cause.message()));
}

}  // namespace

absl::StatusOr<DiscreteMechanism> ReadDiscreteMechanismCsv(
    const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  const std::vector<std::string_view> lines = Lines(*text);
  if (lines.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": empty file"));
  }

  const std::vector<std::string_view> header = SplitFields(lines[0], ',');
  if (header.size() < 3) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ":1: expected x_m,y_m and at least one output"));
  }
  std::vector<PlanarPoint> outputs;
  for (size_t c = 2; c < header.size(); ++c) {
    const std::vector<std::string_view> xy = SplitFields(header[c], ':');
    if (xy.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":1: output column '", std::string(header[c]), "' is not <x>:<y>"));
    }
    absl::StatusOr<double> x = ParseDouble(xy[0]);
    absl::StatusOr<double> y = ParseDouble(xy[1]);
    if (!x.ok()) return LineError(path, 1, x.status());
    if (!y.ok()) return LineError(path, 1, y.status());
    outputs.push_back({*x, *y});
  }

  std::vector<PlanarPoint> inputs;
  std::vector<std::vector<double>> matrix;
  for (size_t l = 1; l < lines.size(); ++l) {
    const std::vector<std::string_view> fields = SplitFields(lines[l], ',');
    if (fields.size() != header.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", l + 1, ": expected ", header.size(), " fields, got ",
          fields.size()));
    }
    std::vector<double> values;
    for (std::string_view f : fields) {
      absl::StatusOr<double> v = ParseDouble(f);
      if (!v.ok()) return LineError(path, l + 1, v.status());
      values.push_back(*v);
    }
    inputs.push_back({values[0], values[1]});
    matrix.emplace_back(values.begin() + 2, values.end());
  }
  return DiscreteMechanism::Create(std::move(inputs), std::move(outputs),
                                   std::move(matrix));
}

absl::Status WriteDiscreteMechanismCsv(const DiscreteMechanism& mech,
                                       const std::string& path) {
  std::string out = "x_m,y_m";
  for (const PlanarPoint& z : mech.outputs()) {
    absl::StrAppend(&out, ",", FormatDouble(z.x), ":", FormatDouble(z.y));
  }
  out += "\n";
  for (size_t i = 0; i < mech.num_inputs(); ++i) {
    absl::StrAppend(&out, FormatDouble(mech.inputs()[i].x), ",",
                    FormatDouble(mech.inputs()[i].y));
    for (double v : mech.row(i)) absl::StrAppend(&out, ",", FormatDouble(v));
    out += "\n";
  }
  return WriteFileAtomic(path, out);
}

absl::StatusOr<Pmf> ReadPointPmfCsv(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  const std::vector<std::string_view> lines = Lines(*text);
  std::vector<PmfAtom> atoms;
  for (size_t l = 1; l < lines.size(); ++l) {
    const std::vector<std::string_view> fields = SplitFields(lines[l], ',');
    if (fields.size() != 3) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", l + 1, ": expected x_m,y_m,mass"));
    }
    PmfAtom atom;
    for (size_t c = 0; c < 3; ++c) {
      absl::StatusOr<double> v = ParseDouble(fields[c]);
      if (!v.ok()) return LineError(path, l + 1, v.status());
      (c == 0 ? atom.location.x : c == 1 ? atom.location.y : atom.mass) = *v;
    }
    atoms.push_back(atom);
  }
  return Pmf::Create(std::move(atoms));
}

}  // namespace geopriv

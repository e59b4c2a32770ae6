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

#include "geopriv/random.h"

#include <limits>

namespace geopriv {

namespace {

std::seed_seq MakeSeedSeq(uint64_t seed, uint64_t stream_index) {
  return std::seed_seq{
      static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
      static_cast<uint32_t>(stream_index),
      static_cast<uint32_t>(stream_index >> 32), 0x9e3779b9u};
}

}  // namespace

RandomStream::RandomStream(uint64_t seed, uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  std::seed_seq seq = MakeSeedSeq(seed, stream_index);
  engine_.seed(seq);
}

double RandomStream::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t RandomStream::UniformIndex(uint64_t n) {
  // Rejection keeps the result exactly uniform.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % n;
  uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

}  // namespace geopriv

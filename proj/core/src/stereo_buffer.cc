// Copyright 2026 The Dirloud Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dirloud/stereo_buffer.h"

#include <cmath>

#include "dirloud/errors.h"

namespace dirloud {

void StereoBuffer::validate() const {
  if (left.size() != right.size()) {
    throw CorruptFileError("channel lengths differ: " + std::to_string(left.size()) + " vs " +
                           std::to_string(right.size()));
  }
  if (sample_rate <= 0) {
    throw CorruptFileError("sample rate must be positive, got " + std::to_string(sample_rate));
  }
  for (const auto* channel : {&left, &right}) {
    for (double s : *channel) {
      if (!std::isfinite(s)) {
        throw CorruptFileError("non-finite sample value");
      }
    }
  }
}

}  // namespace dirloud

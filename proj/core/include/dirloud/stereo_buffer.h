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

#ifndef DIRLOUD_STEREO_BUFFER_H_
#define DIRLOUD_STEREO_BUFFER_H_

#include <cstddef>
#include <vector>

namespace dirloud {

// Two-channel time-domain signal. Samples are dimensionless amplitudes with
// full scale at 1.0; both channels always hold the same number of samples.
struct StereoBuffer {
  std::vector<double> left;
  std::vector<double> right;
  int sample_rate = 0;

  std::size_t frames() const { return left.size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(frames()) / sample_rate : 0.0;
  }

  // Throws CorruptFileError when a channel-length, finiteness or rate
  // invariant is violated.
  void validate() const;

  friend bool operator==(const StereoBuffer&, const StereoBuffer&) = default;
};

}  // namespace dirloud

#endif  // DIRLOUD_STEREO_BUFFER_H_

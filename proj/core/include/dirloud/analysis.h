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

#ifndef DIRLOUD_ANALYSIS_H_
#define DIRLOUD_ANALYSIS_H_

#include <vector>

#include "dirloud/distortion.h"
#include "dirloud/loudness.h"
#include "dirloud/stereo_buffer.h"

namespace dirloud {

// End-to-end pipeline parameters. The defaults are the reference
// configuration: 22 directions, xi = 0.006, bands 7..19 of a 20-band
// partition, 1024/512 Hann frames.
struct AnalysisConfig {
  int directions = 22;
  double xi = 0.006;
  int band_lo = 7;
  int band_hi = 19;
  int num_bands = 20;
  double f_min = 0.0;
  int block_size = 1024;
  int hop = 512;
  bool allow_any_rate = false;
  int jobs = 1;

  std::vector<int> band_subset() const;
  void validate() const;  // throws ConfigError
};

// Peripheral analysis, panning index, directional loudness map.
DirectionalLoudnessMap compute_loudness_map(const StereoBuffer& buf, const AnalysisConfig& cfg);

// Aligns the pair, computes both maps and their distortion. Throws
// RateMismatchError when the sample rates differ.
DldReport compare_buffers(const StereoBuffer& ref, const StereoBuffer& sut,
                          const AnalysisConfig& cfg);

}  // namespace dirloud

#endif  // DIRLOUD_ANALYSIS_H_

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

#ifndef DIRLOUD_LOUDNESS_H_
#define DIRLOUD_LOUDNESS_H_

#include <cstddef>
#include <vector>

#include "dirloud/matrix.h"
#include "dirloud/panning.h"

namespace dirloud {

// Parameters a loudness map was computed with. Two maps may only be compared
// when these match.
struct MapParameters {
  double xi = 0.006;
  std::vector<int> band_subset;
  double f_min = 0.0;
  int block_size = 1024;
  int hop = 512;
  int sample_rate = 48000;
  int num_bands = 20;

  friend bool operator==(const MapParameters&, const MapParameters&) = default;
};

// Loudness over time frames (rows) and panning directions (columns). All
// values are non-negative and finite.
struct DirectionalLoudnessMap {
  RealMatrix values;               // frames x directions
  std::vector<double> directions;  // column grid
  MapParameters params;

  std::size_t frames() const { return values.rows(); }
  std::size_t direction_count() const { return values.cols(); }
  double frame_duration_s() const {
    return params.sample_rate > 0 ? static_cast<double>(params.block_size) / params.sample_rate
                                  : 0.0;
  }
};

// Plain complex sum of both channels, no scaling.
ComplexMatrix downmix(const ComplexMatrix& left, const ComplexMatrix& right);

// ((1/K_b) sum_k |Y(m,k)|^2)^0.25 over the inclusive bin range, one value
// per frame.
std::vector<double> band_loudness(const ComplexMatrix& y_dm, int first_bin, int last_bin);

// For each direction: directional extraction, downmix, per-band loudness,
// averaged over the band subset. jobs > 1 distributes directions over
// threads; the result does not depend on jobs.
DirectionalLoudnessMap loudness_map(const BandedSpectrogram& spec, const PanningIndexField& field,
                                    const DirectionBank& bank, const std::vector<int>& subset,
                                    int jobs = 1);

}  // namespace dirloud

#endif  // DIRLOUD_LOUDNESS_H_

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

#ifndef DIRLOUD_PERIPHERAL_H_
#define DIRLOUD_PERIPHERAL_H_

#include "dirloud/ear_model.h"
#include "dirloud/erb_bands.h"
#include "dirloud/matrix.h"
#include "dirloud/stft.h"

namespace dirloud {

// STFT frames after ERB banding and outer/middle ear weighting; the common
// input of the panning and loudness stages.
struct BandedSpectrogram {
  ComplexMatrix left;
  ComplexMatrix right;
  BandPartition partition;
  EarWeights weights;
  StftConfig config;

  std::size_t frames() const { return left.rows(); }
  std::size_t bins() const { return left.cols(); }
};

// Scales every bin of band b by the band's ear gain, identically in both
// channels. Bins not assigned to any band are zeroed.
BandedSpectrogram apply_ear_weighting(const ChannelSpectra& spectra, const BandPartition& part,
                                      const EarWeights& weights, const StftConfig& cfg);

// Full front end: STFT analysis, ERB partition, ear weighting.
BandedSpectrogram peripheral_analyze(const StereoBuffer& buf, const StftConfig& cfg,
                                     int num_bands, double f_min);

}  // namespace dirloud

#endif  // DIRLOUD_PERIPHERAL_H_

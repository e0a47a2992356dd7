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

#ifndef DIRLOUD_EAR_MODEL_H_
#define DIRLOUD_EAR_MODEL_H_

#include <vector>

#include "dirloud/erb_bands.h"

namespace dirloud {

// Combined outer/middle ear magnitude response in dB:
//   W(f) = -0.6 * 3.64 (f/1k)^-0.8 + 6.5 e^(-0.6 (f/1k - 3.3)^2) - 1e-3 (f/1k)^3.6
// Frequencies below 50 Hz are clamped to 50 Hz to keep the first term finite
// towards DC.
double ear_weight_db(double hz);

// Center frequency per band: geometric mean of the band edges, arithmetic
// mean for a band whose lower edge is at 0 Hz.
std::vector<double> band_center_frequencies(const BandPartition& part);

// Per-band linear gains 10^(W(fc)/20); all finite and positive.
struct EarWeights {
  std::vector<double> gain;
};

EarWeights make_ear_weights(const BandPartition& part);

}  // namespace dirloud

#endif  // DIRLOUD_EAR_MODEL_H_

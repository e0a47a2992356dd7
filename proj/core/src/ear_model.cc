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

#include "dirloud/ear_model.h"

#include <algorithm>
#include <cmath>

namespace dirloud {

double ear_weight_db(double hz) {
  const double f = std::max(hz, 50.0) / 1000.0;
  return -0.6 * 3.64 * std::pow(f, -0.8) + 6.5 * std::exp(-0.6 * (f - 3.3) * (f - 3.3)) -
         1e-3 * std::pow(f, 3.6);
}

std::vector<double> band_center_frequencies(const BandPartition& part) {
  std::vector<double> centers(static_cast<std::size_t>(part.bands()));
  for (int b = 0; b < part.bands(); ++b) {
    const double lo = part.edges_hz[static_cast<std::size_t>(b)];
    const double hi = part.edges_hz[static_cast<std::size_t>(b) + 1];
    centers[static_cast<std::size_t>(b)] = lo <= 0.0 ? 0.5 * (lo + hi) : std::sqrt(lo * hi);
  }
  return centers;
}

EarWeights make_ear_weights(const BandPartition& part) {
  EarWeights weights;
  weights.gain.reserve(static_cast<std::size_t>(part.bands()));
  for (double fc : band_center_frequencies(part)) {
    weights.gain.push_back(std::pow(10.0, ear_weight_db(fc) / 20.0));
  }
  return weights;
}

}  // namespace dirloud

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

#include "dirloud/peripheral.h"

#include <string>

#include "dirloud/errors.h"

namespace dirloud {

BandedSpectrogram apply_ear_weighting(const ChannelSpectra& spectra, const BandPartition& part,
                                      const EarWeights& weights, const StftConfig& cfg) {
  if (!spectra.left.same_shape(spectra.right)) {
    throw ShapeMismatchError("channel spectrograms have different dimensions");
  }
  if (static_cast<int>(spectra.left.cols()) != part.bins()) {
    throw ShapeMismatchError("partition covers " + std::to_string(part.bins()) +
                             " bins, spectrogram has " + std::to_string(spectra.left.cols()));
  }
  if (static_cast<int>(weights.gain.size()) != part.bands()) {
    throw ShapeMismatchError("one ear weight per band required");
  }

  std::vector<double> bin_gain(spectra.left.cols());
  for (std::size_t k = 0; k < bin_gain.size(); ++k) {
    const int band = part.band_of_bin[k];
    bin_gain[k] = band < 0 ? 0.0 : weights.gain[static_cast<std::size_t>(band)];
  }

  BandedSpectrogram out;
  out.partition = part;
  out.weights = weights;
  out.config = cfg;
  out.left = spectra.left;
  out.right = spectra.right;
  for (ComplexMatrix* channel : {&out.left, &out.right}) {
    for (std::size_t m = 0; m < channel->rows(); ++m) {
      auto* row = channel->row(m);
      for (std::size_t k = 0; k < channel->cols(); ++k) {
        row[k] *= bin_gain[k];
      }
    }
  }
  return out;
}

BandedSpectrogram peripheral_analyze(const StereoBuffer& buf, const StftConfig& cfg,
                                     int num_bands, double f_min) {
  const ChannelSpectra spectra = stft_analyze(buf, cfg);
  const BandPartition part = erb_partition(buf.sample_rate, num_bands, f_min, cfg.block_size);
  return apply_ear_weighting(spectra, part, make_ear_weights(part), cfg);
}

}  // namespace dirloud

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

#include "dirloud/analysis.h"

#include <numeric>
#include <string>

#include "dirloud/errors.h"
#include "dirloud/peripheral.h"
#include "dirloud/wav_io.h"

namespace dirloud {

std::vector<int> AnalysisConfig::band_subset() const {
  std::vector<int> subset(static_cast<std::size_t>(band_hi - band_lo + 1));
  std::iota(subset.begin(), subset.end(), band_lo);
  return subset;
}

void AnalysisConfig::validate() const {
  if (directions < 2) {
    throw ConfigError("need at least two panning directions, got " + std::to_string(directions));
  }
  if (!(xi > 0.0)) {
    throw ConfigError("xi must be positive");
  }
  if (num_bands < 1) {
    throw ConfigError("need at least one band");
  }
  if (band_lo < 0 || band_hi < band_lo || band_hi >= num_bands) {
    throw ConfigError("band subset " + std::to_string(band_lo) + ".." + std::to_string(band_hi) +
                      " does not fit a " + std::to_string(num_bands) + "-band partition");
  }
  if (f_min < 0.0) {
    throw ConfigError("f_min must be non-negative");
  }
  if (jobs < 1) {
    throw ConfigError("jobs must be at least 1");
  }
  StftConfig{block_size, hop, kReferenceSampleRate}.validate();
}

DirectionalLoudnessMap compute_loudness_map(const StereoBuffer& buf, const AnalysisConfig& cfg) {
  cfg.validate();
  const StftConfig stft_cfg{cfg.block_size, cfg.hop, buf.sample_rate};
  const BandedSpectrogram spec = peripheral_analyze(buf, stft_cfg, cfg.num_bands, cfg.f_min);
  const PanningIndexField field = panning_index(spec);
  const DirectionBank bank = DirectionBank::equally_spaced(cfg.directions, cfg.xi);
  return loudness_map(spec, field, bank, cfg.band_subset(), cfg.jobs);
}

DldReport compare_buffers(const StereoBuffer& ref, const StereoBuffer& sut,
                          const AnalysisConfig& cfg) {
  const AlignedPair aligned = align_pair(ref, sut);
  const DirectionalLoudnessMap map_ref = compute_loudness_map(aligned.ref, cfg);
  const DirectionalLoudnessMap map_sut = compute_loudness_map(aligned.sut, cfg);
  return dld(map_ref, map_sut);
}

}  // namespace dirloud

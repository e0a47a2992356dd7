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

#include "dirloud/loudness.h"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "dirloud/errors.h"

namespace dirloud {

ComplexMatrix downmix(const ComplexMatrix& left, const ComplexMatrix& right) {
  if (!left.same_shape(right)) {
    throw ShapeMismatchError("downmix inputs have different dimensions");
  }
  ComplexMatrix sum(left.rows(), left.cols());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum.data()[i] = left.data()[i] + right.data()[i];
  }
  return sum;
}

std::vector<double> band_loudness(const ComplexMatrix& y_dm, int first_bin, int last_bin) {
  if (first_bin < 0 || last_bin < first_bin ||
      last_bin >= static_cast<int>(y_dm.cols())) {
    throw ShapeMismatchError("band bin range [" + std::to_string(first_bin) + ", " +
                             std::to_string(last_bin) + "] outside spectrogram");
  }
  const double width = last_bin - first_bin + 1;
  std::vector<double> loudness(y_dm.rows());
  for (std::size_t m = 0; m < y_dm.rows(); ++m) {
    const auto* row = y_dm.row(m);
    double power = 0.0;
    for (int k = first_bin; k <= last_bin; ++k) {
      power += std::norm(row[k]);
    }
    loudness[m] = std::pow(power / width, 0.25);
  }
  return loudness;
}

DirectionalLoudnessMap loudness_map(const BandedSpectrogram& spec, const PanningIndexField& field,
                                    const DirectionBank& bank, const std::vector<int>& subset,
                                    int jobs) {
  if (subset.empty()) {
    throw EmptySubsetError("band subset is empty");
  }
  for (int b : subset) {
    if (b < 0 || b >= spec.partition.bands()) {
      throw ConfigError("band index " + std::to_string(b) + " outside partition of " +
                        std::to_string(spec.partition.bands()) + " bands");
    }
  }

  const std::size_t frames = spec.frames();
  const int num_directions = bank.count();
  DirectionalLoudnessMap map;
  map.values = RealMatrix(frames, static_cast<std::size_t>(num_directions));
  map.directions = bank.directions;
  map.params.xi = bank.xi;
  map.params.band_subset = subset;
  map.params.f_min = spec.partition.f_min;
  map.params.block_size = spec.config.block_size;
  map.params.hop = spec.config.hop;
  map.params.sample_rate = spec.config.sample_rate;
  map.params.num_bands = spec.partition.bands();

  const auto compute_direction = [&](int j) {
    const ChannelSpectra directional = extract_directional(spec, field, bank, j);
    const ComplexMatrix y_dm = downmix(directional.left, directional.right);
    std::vector<double> acc(frames, 0.0);
    for (int b : subset) {
      const auto [first, last] = spec.partition.bin_range[static_cast<std::size_t>(b)];
      const std::vector<double> band = band_loudness(y_dm, first, last);
      for (std::size_t m = 0; m < frames; ++m) {
        acc[m] += band[m];
      }
    }
    const double scale = 1.0 / static_cast<double>(subset.size());
    for (std::size_t m = 0; m < frames; ++m) {
      map.values(m, static_cast<std::size_t>(j)) = acc[m] * scale;
    }
  };

  if (jobs <= 1 || num_directions <= 1) {
    for (int j = 0; j < num_directions; ++j) {
      compute_direction(j);
    }
  } else {
    // Directions write disjoint columns, so the result is independent of the
    // scheduling order.
    std::atomic<int> next{0};
    const int workers = std::min(jobs, num_directions);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int j; (j = next.fetch_add(1)) < num_directions;) {
          compute_direction(j);
        }
      });
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  return map;
}

}  // namespace dirloud

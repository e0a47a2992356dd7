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

#include "dirloud/erb_bands.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirloud/errors.h"

namespace dirloud {

double erb_number(double hz) { return 21.4 * std::log10(1.0 + 0.00437 * hz); }

double erb_to_hz(double cams) { return (std::pow(10.0, cams / 21.4) - 1.0) / 0.00437; }

BandPartition erb_partition(int sample_rate, int num_bands, double f_min, int block_size) {
  if (sample_rate <= 0 || block_size <= 0) {
    throw ConfigError("sample rate and block size must be positive");
  }
  if (num_bands < 1) {
    throw ConfigError("need at least one band, got " + std::to_string(num_bands));
  }
  const double nyquist = sample_rate / 2.0;
  if (f_min < 0.0 || f_min >= nyquist) {
    throw ConfigError("f_min must lie in [0, Nyquist), got " + std::to_string(f_min));
  }

  BandPartition part;
  part.f_min = f_min;
  const double lo = erb_number(f_min);
  const double hi = erb_number(nyquist);
  part.edges_hz.resize(static_cast<std::size_t>(num_bands) + 1);
  for (int j = 0; j <= num_bands; ++j) {
    part.edges_hz[static_cast<std::size_t>(j)] =
        erb_to_hz(lo + (hi - lo) * j / num_bands);
  }
  // Pin the outer edges; the round trip through the ERB scale drifts by a few
  // ulp otherwise.
  part.edges_hz.front() = f_min;
  part.edges_hz.back() = nyquist;

  const int bins = block_size / 2 + 1;
  part.band_of_bin.resize(static_cast<std::size_t>(bins));
  part.bin_range.assign(static_cast<std::size_t>(num_bands), {-1, -1});
  part.width.assign(static_cast<std::size_t>(num_bands), 0);
  for (int k = 0; k < bins; ++k) {
    const double f = static_cast<double>(k) * sample_rate / block_size;
    if (f < f_min) {
      part.band_of_bin[static_cast<std::size_t>(k)] = -1;
      continue;
    }
    auto it = std::upper_bound(part.edges_hz.begin(), part.edges_hz.end(), f);
    int band = static_cast<int>(it - part.edges_hz.begin()) - 1;
    band = std::clamp(band, 0, num_bands - 1);
    part.band_of_bin[static_cast<std::size_t>(k)] = band;
    auto& range = part.bin_range[static_cast<std::size_t>(band)];
    if (range.first < 0) range.first = k;
    range.second = k;
    ++part.width[static_cast<std::size_t>(band)];
  }

  for (int b = 0; b < num_bands; ++b) {
    if (part.width[static_cast<std::size_t>(b)] == 0) {
      throw InfeasiblePartitionError(
          "band " + std::to_string(b) + " of " + std::to_string(num_bands) +
          " contains no analysis bins (block " + std::to_string(block_size) + " at " +
          std::to_string(sample_rate) + " Hz)");
    }
  }
  return part;
}

}  // namespace dirloud

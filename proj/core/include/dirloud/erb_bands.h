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

#ifndef DIRLOUD_ERB_BANDS_H_
#define DIRLOUD_ERB_BANDS_H_

#include <utility>
#include <vector>

namespace dirloud {

// Glasberg-Moore ERB-number in Cams: 21.4 * log10(1 + 0.00437 f).
double erb_number(double hz);
double erb_to_hz(double cams);

// Partition of the one-sided analysis bins into contiguous bands whose edges
// are equally spaced on the ERB-number scale. Bins whose center frequency
// lies below f_min stay unassigned (band index -1) and are excluded from the
// analysis.
struct BandPartition {
  std::vector<double> edges_hz;                // bands() + 1 ascending edges
  std::vector<int> band_of_bin;                // per analysis bin, -1 if unassigned
  std::vector<std::pair<int, int>> bin_range;  // per band, [first, last] inclusive
  std::vector<int> width;                      // bins per band
  double f_min = 0.0;

  int bands() const { return static_cast<int>(width.size()); }
  int bins() const { return static_cast<int>(band_of_bin.size()); }
};

// Bins are assigned by their center frequency k * sample_rate / block_size;
// a band's lower edge is inclusive. Throws InfeasiblePartitionError when a
// band would contain zero bins.
BandPartition erb_partition(int sample_rate, int num_bands, double f_min, int block_size);

}  // namespace dirloud

#endif  // DIRLOUD_ERB_BANDS_H_

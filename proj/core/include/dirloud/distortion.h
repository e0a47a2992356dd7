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

#ifndef DIRLOUD_DISTORTION_H_
#define DIRLOUD_DISTORTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dirloud/loudness.h"

namespace dirloud {

// Directional loudness distortion of a REF/SUT pair: the mean absolute
// difference of their loudness maps, with per-direction and per-frame
// breakdowns. dld equals the mean of either breakdown.
struct DldReport {
  double dld = 0.0;
  std::size_t frames = 0;
  std::size_t direction_count = 0;
  std::vector<double> per_direction;  // time-averaged |diff| per direction
  std::vector<double> per_frame;      // direction-averaged |diff| per frame
  std::vector<double> directions;
  MapParameters params;
};

// Throws ShapeMismatchError on differing dimensions and
// ParameterMismatchError when the maps were computed with different
// parameters.
DldReport dld(const DirectionalLoudnessMap& map_ref, const DirectionalLoudnessMap& map_sut);

// Element-wise |ref - sut|, exported like any map for visualization.
DirectionalLoudnessMap map_difference(const DirectionalLoudnessMap& map_ref,
                                      const DirectionalLoudnessMap& map_sut);

// Sample Pearson correlation coefficient. Throws DegenerateInputError for
// fewer than two points, length mismatch, or zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Single JSON object with keys dld, frames, directions, per_direction,
// per_frame, parameters.
std::string report_to_json(const DldReport& report);

}  // namespace dirloud

#endif  // DIRLOUD_DISTORTION_H_

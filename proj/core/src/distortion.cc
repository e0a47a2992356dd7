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

#include "dirloud/distortion.h"

#include <cmath>

#include "json.hpp"

#include "dirloud/errors.h"

namespace dirloud {

namespace {

void check_comparable(const DirectionalLoudnessMap& a, const DirectionalLoudnessMap& b) {
  if (!a.values.same_shape(b.values)) {
    throw ShapeMismatchError("maps have different dimensions: " + std::to_string(a.frames()) +
                             "x" + std::to_string(a.direction_count()) + " vs " +
                             std::to_string(b.frames()) + "x" +
                             std::to_string(b.direction_count()));
  }
  if (a.directions != b.directions || a.params != b.params) {
    throw ParameterMismatchError("maps were computed with different parameters");
  }
}

}  // namespace

DldReport dld(const DirectionalLoudnessMap& map_ref, const DirectionalLoudnessMap& map_sut) {
  check_comparable(map_ref, map_sut);
  const std::size_t frames = map_ref.frames();
  const std::size_t directions = map_ref.direction_count();

  DldReport report;
  report.frames = frames;
  report.direction_count = directions;
  report.directions = map_ref.directions;
  report.params = map_ref.params;
  report.per_direction.assign(directions, 0.0);
  report.per_frame.assign(frames, 0.0);

  double total = 0.0;
  for (std::size_t m = 0; m < frames; ++m) {
    const double* ref_row = map_ref.values.row(m);
    const double* sut_row = map_sut.values.row(m);
    double row_sum = 0.0;
    for (std::size_t j = 0; j < directions; ++j) {
      const double diff = std::abs(ref_row[j] - sut_row[j]);
      report.per_direction[j] += diff;
      row_sum += diff;
    }
    report.per_frame[m] = row_sum / static_cast<double>(directions);
    total += row_sum;
  }
  for (double& column : report.per_direction) {
    column /= static_cast<double>(frames);
  }
  report.dld = total / (static_cast<double>(frames) * static_cast<double>(directions));
  return report;
}

DirectionalLoudnessMap map_difference(const DirectionalLoudnessMap& map_ref,
                                      const DirectionalLoudnessMap& map_sut) {
  check_comparable(map_ref, map_sut);
  DirectionalLoudnessMap diff = map_ref;
  for (std::size_t i = 0; i < diff.values.size(); ++i) {
    diff.values.data()[i] = std::abs(map_ref.values.data()[i] - map_sut.values.data()[i]);
  }
  return diff;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw DegenerateInputError("correlation inputs have different lengths");
  }
  const std::size_t n = xs.size();
  if (n < 2) {
    throw DegenerateInputError("correlation needs at least two points");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double covariance = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    covariance += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) {
    throw DegenerateInputError("correlation undefined for zero-variance input");
  }
  return covariance / std::sqrt(var_x * var_y);
}

std::string report_to_json(const DldReport& report) {
  nlohmann::ordered_json j;
  j["dld"] = report.dld;
  j["frames"] = report.frames;
  j["directions"] = report.direction_count;
  j["per_direction"] = report.per_direction;
  j["per_frame"] = report.per_frame;
  j["parameters"] = {
      {"xi", report.params.xi},
      {"directions", report.direction_count},
      {"direction_grid", report.directions},
      {"band_subset", report.params.band_subset},
      {"f_min", report.params.f_min},
      {"block", report.params.block_size},
      {"hop", report.params.hop},
      {"sample_rate", report.params.sample_rate},
      {"num_bands", report.params.num_bands},
  };
  return j.dump(2) + "\n";
}

}  // namespace dirloud

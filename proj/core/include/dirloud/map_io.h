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

#ifndef DIRLOUD_MAP_IO_H_
#define DIRLOUD_MAP_IO_H_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "dirloud/loudness.h"

namespace dirloud {

// CSV layout: a header row with the direction grid, then one row of loudness
// values per frame. All numbers carry 12 significant digits.
void write_map_csv(std::ostream& out, const DirectionalLoudnessMap& map);
void write_map_csv(const std::filesystem::path& path, const DirectionalLoudnessMap& map);

struct CsvMap {
  std::vector<double> directions;
  RealMatrix values;  // frames x directions
};

CsvMap read_map_csv(const std::filesystem::path& path);

// Binary 8-bit PGM normalized to the map maximum. Frames run left to right;
// directions run bottom (-1) to top (+1).
void write_map_pgm(std::ostream& out, const DirectionalLoudnessMap& map);
void write_map_pgm(const std::filesystem::path& path, const DirectionalLoudnessMap& map);

// 12-significant-digit representation used by all CSV writers.
std::string format_number(double value);

}  // namespace dirloud

#endif  // DIRLOUD_MAP_IO_H_

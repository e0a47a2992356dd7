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

#include "dirloud/map_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "dirloud/errors.h"

namespace dirloud {

namespace {

std::vector<double> parse_csv_row(const std::string& line, const std::string& context) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t comma = std::min(line.find(',', pos), line.size());
    const std::string cell = line.substr(pos, comma - pos);
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(cell, &consumed);
    } catch (const std::exception&) {
      throw CorruptFileError(context + ": cannot parse '" + cell + "' as a number");
    }
    if (consumed != cell.size()) {
      throw CorruptFileError(context + ": cannot parse '" + cell + "' as a number");
    }
    values.push_back(value);
    if (comma == line.size()) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

std::string format_number(double value) {
  char out[64];
  std::snprintf(out, sizeof out, "%.12g", value);
  return out;
}

void write_map_csv(std::ostream& out, const DirectionalLoudnessMap& map) {
  for (std::size_t j = 0; j < map.direction_count(); ++j) {
    if (j > 0) out << ',';
    out << format_number(map.directions[j]);
  }
  out << '\n';
  for (std::size_t m = 0; m < map.frames(); ++m) {
    const double* row = map.values.row(m);
    for (std::size_t j = 0; j < map.direction_count(); ++j) {
      if (j > 0) out << ',';
      out << format_number(row[j]);
    }
    out << '\n';
  }
}

void write_map_csv(const std::filesystem::path& path, const DirectionalLoudnessMap& map) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) {
    throw FileIoError("cannot create " + path.string());
  }
  write_map_csv(file, map);
  if (!file) {
    throw FileIoError("write failed for " + path.string());
  }
}

CsvMap read_map_csv(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw FileIoError("cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(file, line)) {
    throw CorruptFileError(path.string() + ": empty map file");
  }
  CsvMap map;
  map.directions = parse_csv_row(line, path.string());

  std::vector<std::vector<double>> rows;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::vector<double> row = parse_csv_row(line, path.string());
    if (row.size() != map.directions.size()) {
      throw CorruptFileError(path.string() + ": row has " + std::to_string(row.size()) +
                             " columns, header has " + std::to_string(map.directions.size()));
    }
    rows.push_back(std::move(row));
  }
  map.values = RealMatrix(rows.size(), map.directions.size());
  for (std::size_t m = 0; m < rows.size(); ++m) {
    std::copy(rows[m].begin(), rows[m].end(), map.values.row(m));
  }
  return map;
}

void write_map_pgm(std::ostream& out, const DirectionalLoudnessMap& map) {
  const std::size_t width = map.frames();
  const std::size_t height = map.direction_count();
  double peak = 0.0;
  for (double v : map.values.data()) {
    peak = std::max(peak, v);
  }
  out << "P5\n" << width << ' ' << height << "\n255\n";
  // Top image row is the +1 (right) direction, matching a y-up plot.
  for (std::size_t r = 0; r < height; ++r) {
    const std::size_t j = height - 1 - r;
    for (std::size_t m = 0; m < width; ++m) {
      unsigned char pixel = 0;
      if (peak > 0.0) {
        const double scaled = 255.0 * map.values(m, j) / peak;
        pixel = static_cast<unsigned char>(std::clamp(std::lround(scaled), 0L, 255L));
      }
      out.put(static_cast<char>(pixel));
    }
  }
}

void write_map_pgm(const std::filesystem::path& path, const DirectionalLoudnessMap& map) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw FileIoError("cannot create " + path.string());
  }
  write_map_pgm(file, map);
  if (!file) {
    throw FileIoError("write failed for " + path.string());
  }
}

}  // namespace dirloud

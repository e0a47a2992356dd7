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

#include "dirloud/panning.h"

#include <cmath>
#include <string>

#include "dirloud/errors.h"

namespace dirloud {

namespace {

double sign_of(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

}  // namespace

PanningIndexField panning_index(const ComplexMatrix& left, const ComplexMatrix& right) {
  if (!left.same_shape(right)) {
    throw ShapeMismatchError("channel spectrograms have different dimensions");
  }
  PanningIndexField field(left.rows(), left.cols());
  for (std::size_t m = 0; m < left.rows(); ++m) {
    const auto* xl = left.row(m);
    const auto* xr = right.row(m);
    auto* psi = field.row(m);
    for (std::size_t k = 0; k < left.cols(); ++k) {
      const double a = std::abs(xl[k]);
      const double b = std::abs(xr[k]);
      if (a == 0.0 && b == 0.0) {
        psi[k] = 0.0;  // silent bin carries no direction
      } else if (b == 0.0) {
        psi[k] = -1.0;
      } else if (a == 0.0) {
        psi[k] = 1.0;
      } else {
        const double cross = a * b;
        const double similarity = 2.0 * cross / (a * a + b * b);
        const double side = cross / (a * a) - cross / (b * b);
        psi[k] = (1.0 - similarity) * sign_of(side);
      }
    }
  }
  return field;
}

PanningIndexField panning_index(const BandedSpectrogram& spec) {
  return panning_index(spec.left, spec.right);
}

double gaussian_window(double psi, double psi0, double xi) {
  const double d = psi - psi0;
  return std::exp(-(d * d) / (2.0 * xi));
}

DirectionBank DirectionBank::equally_spaced(int count, double xi) {
  if (count < 2) {
    throw ConfigError("need at least two panning directions, got " + std::to_string(count));
  }
  if (!(xi > 0.0)) {
    throw ConfigError("direction window width must be positive");
  }
  DirectionBank bank;
  bank.xi = xi;
  bank.directions.resize(static_cast<std::size_t>(count));
  // Mirrored construction keeps the grid exactly symmetric about 0.
  for (int j = 0; j < count / 2; ++j) {
    const double d = -1.0 + 2.0 * j / (count - 1);
    bank.directions[static_cast<std::size_t>(j)] = d;
    bank.directions[static_cast<std::size_t>(count - 1 - j)] = -d;
  }
  if (count % 2 == 1) {
    bank.directions[static_cast<std::size_t>(count / 2)] = 0.0;
  }
  return bank;
}

ChannelSpectra extract_directional(const BandedSpectrogram& spec, const PanningIndexField& field,
                                   const DirectionBank& bank, int direction) {
  if (!spec.left.same_shape(field)) {
    throw ShapeMismatchError("panning index field does not match the spectrogram");
  }
  if (direction < 0 || direction >= bank.count()) {
    throw ConfigError("direction index " + std::to_string(direction) + " out of range");
  }
  const double psi0 = bank.directions[static_cast<std::size_t>(direction)];

  ChannelSpectra out;
  out.left = ComplexMatrix(spec.left.rows(), spec.left.cols());
  out.right = ComplexMatrix(spec.left.rows(), spec.left.cols());
  for (std::size_t m = 0; m < spec.left.rows(); ++m) {
    const auto* xl = spec.left.row(m);
    const auto* xr = spec.right.row(m);
    const auto* psi = field.row(m);
    auto* yl = out.left.row(m);
    auto* yr = out.right.row(m);
    for (std::size_t k = 0; k < spec.left.cols(); ++k) {
      const double theta = gaussian_window(psi[k], psi0, bank.xi);
      yl[k] = xl[k] * theta;
      yr[k] = xr[k] * theta;
    }
  }
  return out;
}

}  // namespace dirloud

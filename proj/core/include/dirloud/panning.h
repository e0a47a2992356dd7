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

#ifndef DIRLOUD_PANNING_H_
#define DIRLOUD_PANNING_H_

#include <vector>

#include "dirloud/matrix.h"
#include "dirloud/peripheral.h"

namespace dirloud {

// Per-frame, per-bin panning index in [-1, 1]: -1 fully left, 0 center,
// +1 fully right.
using PanningIndexField = RealMatrix;

// Per bin, with a = |X_L| and b = |X_R|:
//   similarity = 2ab / (a^2 + b^2)
//   side       = sign(ab/a^2 - ab/b^2)
//   psi        = (1 - similarity) * side
// Silent bins map to 0; bins with exactly one silent channel map to -1/+1.
// Antisymmetric under channel swap and invariant under common positive
// scaling of both channels.
PanningIndexField panning_index(const ComplexMatrix& left, const ComplexMatrix& right);
PanningIndexField panning_index(const BandedSpectrogram& spec);

// exp(-(psi - psi0)^2 / (2 xi)); 1 at the center, (0, 1] everywhere.
double gaussian_window(double psi, double psi0, double xi);

// Equally spaced panning directions covering [-1, 1], with a common Gaussian
// window width. The grid is exactly symmetric about 0.
struct DirectionBank {
  std::vector<double> directions;
  double xi = 0.006;

  static DirectionBank equally_spaced(int count, double xi);
  int count() const { return static_cast<int>(directions.size()); }

  friend bool operator==(const DirectionBank&, const DirectionBank&) = default;
};

// Y_i(m,k) = X_i(m,k) * gaussian_window(psi(m,k), directions[j], xi), the
// same scalar weight applied to both channels of a bin.
ChannelSpectra extract_directional(const BandedSpectrogram& spec, const PanningIndexField& field,
                                   const DirectionBank& bank, int direction);

}  // namespace dirloud

#endif  // DIRLOUD_PANNING_H_

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

#ifndef DIRLOUD_SYNTH_H_
#define DIRLOUD_SYNTH_H_

#include <cstdint>

#include "dirloud/stereo_buffer.h"

namespace dirloud {

// Amplitude-panning gain pair. For a coherent source the implied panning
// index has the closed form sign(gR - gL) * (gL - gR)^2 / (gL^2 + gR^2).
struct PanLaw {
  double gain_left = 1.0;
  double gain_right = 1.0;

  // Constant-power pan: position -1 gives (1, 0), 0 gives (sqrt(1/2),
  // sqrt(1/2)), +1 gives (0, 1).
  static PanLaw constant_power(double position);

  double closed_form_psi() const;
};

struct MonoSource {
  enum class Kind { kSine, kWhiteNoise };

  Kind kind = Kind::kWhiteNoise;
  double amplitude = 1.0;
  double frequency_hz = 440.0;  // sine only
  std::uint64_t seed = 0;       // noise only

  static MonoSource sine(double frequency_hz, double amplitude = 1.0);
  static MonoSource white_noise(std::uint64_t seed, double amplitude = 1.0);
};

// left = gL * mono, right = gR * mono, sample exact and reproducible from
// the seed.
StereoBuffer panned_source(const MonoSource& source, const PanLaw& law, double duration_s,
                           int sample_rate);

// Within [t0, t1), with M = (L+R)/2: out_L = (1-alpha) L + alpha M and
// likewise for the right channel; unchanged outside. alpha = 1 collapses the
// interval to mono.
StereoBuffer pan_collapse(const StereoBuffer& buf, double alpha, double t0_s, double t1_s);

// out_L = L + beta R, out_R = R + beta L over the whole signal.
StereoBuffer crosstalk(const StereoBuffer& buf, double beta);

}  // namespace dirloud

#endif  // DIRLOUD_SYNTH_H_

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

#include "dirloud/synth.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dirloud/errors.h"

namespace dirloud {

namespace {

double sign_of(double x) {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

std::vector<double> render_mono(const MonoSource& source, std::size_t samples, int sample_rate) {
  std::vector<double> mono(samples);
  if (source.kind == MonoSource::Kind::kSine) {
    const double step = 2.0 * std::numbers::pi * source.frequency_hz / sample_rate;
    for (std::size_t i = 0; i < samples; ++i) {
      mono[i] = source.amplitude * std::sin(step * static_cast<double>(i));
    }
  } else {
    // Raw generator bits mapped to [-1, 1); independent of the standard
    // library's distribution implementation, so identical across platforms.
    std::mt19937_64 rng(source.seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      mono[i] = source.amplitude * (2.0 * u - 1.0);
    }
  }
  return mono;
}

}  // namespace

PanLaw PanLaw::constant_power(double position) {
  if (position < -1.0 || position > 1.0) {
    throw ConfigError("pan position must lie in [-1, 1], got " + std::to_string(position));
  }
  if (position == 0.0) {
    // cos and sin differ by an ulp at pi/4; the center must be exact.
    const double g = std::sqrt(0.5);
    return PanLaw{g, g};
  }
  const double angle = (position + 1.0) * std::numbers::pi / 4.0;
  return PanLaw{std::cos(angle), std::sin(angle)};
}

double PanLaw::closed_form_psi() const {
  const double gl = gain_left;
  const double gr = gain_right;
  const double denom = gl * gl + gr * gr;
  if (denom == 0.0) {
    return 0.0;
  }
  return sign_of(gr - gl) * (gl - gr) * (gl - gr) / denom;
}

MonoSource MonoSource::sine(double frequency_hz, double amplitude) {
  MonoSource source;
  source.kind = Kind::kSine;
  source.frequency_hz = frequency_hz;
  source.amplitude = amplitude;
  return source;
}

MonoSource MonoSource::white_noise(std::uint64_t seed, double amplitude) {
  MonoSource source;
  source.kind = Kind::kWhiteNoise;
  source.seed = seed;
  source.amplitude = amplitude;
  return source;
}

StereoBuffer panned_source(const MonoSource& source, const PanLaw& law, double duration_s,
                           int sample_rate) {
  if (!(duration_s > 0.0)) {
    throw ConfigError("duration must be positive");
  }
  if (sample_rate <= 0) {
    throw ConfigError("sample rate must be positive");
  }
  if (law.gain_left < 0.0 || law.gain_right < 0.0) {
    throw ConfigError("pan gains must be non-negative");
  }
  const auto samples = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
  const std::vector<double> mono = render_mono(source, samples, sample_rate);

  StereoBuffer buf;
  buf.sample_rate = sample_rate;
  buf.left.resize(samples);
  buf.right.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    buf.left[i] = law.gain_left * mono[i];
    buf.right[i] = law.gain_right * mono[i];
  }
  return buf;
}

StereoBuffer pan_collapse(const StereoBuffer& buf, double alpha, double t0_s, double t1_s) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw ConfigError("collapse severity must lie in [0, 1], got " + std::to_string(alpha));
  }
  const double duration = buf.duration_s();
  if (!(t0_s >= 0.0 && t0_s < t1_s && t1_s <= duration + 1e-9)) {
    throw BadIntervalError("interval [" + std::to_string(t0_s) + ", " + std::to_string(t1_s) +
                           ") does not lie inside the " + std::to_string(duration) +
                           " s signal");
  }
  StereoBuffer out = buf;
  if (alpha == 0.0) {
    return out;
  }
  const auto begin = static_cast<std::size_t>(std::llround(t0_s * buf.sample_rate));
  const auto end =
      std::min(buf.frames(), static_cast<std::size_t>(std::llround(t1_s * buf.sample_rate)));
  for (std::size_t i = begin; i < end; ++i) {
    const double mid = 0.5 * (buf.left[i] + buf.right[i]);
    out.left[i] = (1.0 - alpha) * buf.left[i] + alpha * mid;
    out.right[i] = (1.0 - alpha) * buf.right[i] + alpha * mid;
  }
  return out;
}

StereoBuffer crosstalk(const StereoBuffer& buf, double beta) {
  if (beta < 0.0 || beta > 1.0) {
    throw ConfigError("crosstalk leakage must lie in [0, 1], got " + std::to_string(beta));
  }
  StereoBuffer out = buf;
  for (std::size_t i = 0; i < buf.frames(); ++i) {
    out.left[i] = buf.left[i] + beta * buf.right[i];
    out.right[i] = buf.right[i] + beta * buf.left[i];
  }
  return out;
}

}  // namespace dirloud

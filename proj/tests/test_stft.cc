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

#include "dirloud/stft.h"

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "dft_oracle.h"
#include "dirloud/errors.h"
#include "testing_util.h"

using namespace dirloud;
namespace tt = dirloud::testing;

namespace {

StereoBuffer noise_buffer(std::size_t frames, std::uint64_t seed) {
  StereoBuffer buf;
  buf.sample_rate = 48000;
  buf.left = tt::random_samples(frames, seed);
  buf.right = tt::random_samples(frames, seed + 1);
  return buf;
}

}  // namespace

TEST_CASE("frame count formula") {
  const StftConfig cfg;
  CHECK(stft_frame_count(48000, cfg) == 92);
  CHECK(stft_frame_count(1024, cfg) == 1);
  CHECK(stft_frame_count(1025, cfg) == 1);
  CHECK(stft_frame_count(1536, cfg) == 2);
  CHECK_THROWS_AS(stft_frame_count(1023, cfg), InputTooShortError);
}

TEST_CASE("default configuration has 21.3 ms frames") {
  const StftConfig cfg;
  CHECK(cfg.block_duration_s() == doctest::Approx(0.02133).epsilon(1e-3));
  CHECK(cfg.hop_duration_s() == doctest::Approx(0.01067).epsilon(1e-3));
  CHECK(cfg.bins() == 513);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS((StftConfig{0, 512, 48000}).validate(), ConfigError);
  CHECK_THROWS_AS((StftConfig{1024, 0, 48000}).validate(), ConfigError);
  CHECK_THROWS_AS((StftConfig{1024, 2048, 48000}).validate(), ConfigError);
  CHECK_THROWS_AS((StftConfig{1024, 512, 0}).validate(), ConfigError);
  CHECK_NOTHROW((StftConfig{1024, 1024, 48000}).validate());
}

TEST_CASE("Hann window is symmetric with endpoints at zero") {
  const auto window = hann_window(1024);
  CHECK(window.front() == 0.0);
  CHECK(window.back() == 0.0);
  for (std::size_t n = 0; n < window.size(); ++n) {
    CHECK(window[n] == doctest::Approx(window[window.size() - 1 - n]).epsilon(1e-15));
    CHECK(window[n] >= 0.0);
    CHECK(window[n] <= 1.0);
  }
}

TEST_CASE("all-zero input produces an all-zero spectrogram") {
  StereoBuffer buf;
  buf.sample_rate = 48000;
  buf.left.assign(4096, 0.0);
  buf.right.assign(4096, 0.0);
  const ChannelSpectra spectra = stft_analyze(buf, StftConfig{});
  for (const auto& z : spectra.left.data()) {
    CHECK(z == std::complex<double>(0.0, 0.0));
  }
  for (const auto& z : spectra.right.data()) {
    CHECK(z == std::complex<double>(0.0, 0.0));
  }
}

TEST_CASE("937.5 Hz sine peaks at bin 20 in every frame") {
  // 937.5 / (48000/1024) = 20 exactly.
  StereoBuffer buf;
  buf.sample_rate = 48000;
  buf.left.resize(48000);
  for (std::size_t i = 0; i < buf.left.size(); ++i) {
    buf.left[i] = std::sin(2.0 * std::numbers::pi * 937.5 * static_cast<double>(i) / 48000.0);
  }
  buf.right = buf.left;

  const ChannelSpectra spectra = stft_analyze(buf, StftConfig{});
  REQUIRE(spectra.left.rows() == 92);
  for (std::size_t m = 0; m < spectra.left.rows(); ++m) {
    std::size_t argmax = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < spectra.left.cols(); ++k) {
      const double mag = std::abs(spectra.left(m, k));
      if (mag > best) {
        best = mag;
        argmax = k;
      }
    }
    CHECK(argmax == 20);
  }
}

TEST_CASE("frames match the direct DFT oracle") {
  const StftConfig cfg;
  const StereoBuffer buf = noise_buffer(48000, 101);
  const ChannelSpectra spectra = stft_analyze(buf, cfg);
  const auto window = hann_window(cfg.block_size);

  for (std::size_t m = 0; m < spectra.left.rows(); m += 7) {
    std::vector<double> frame(static_cast<std::size_t>(cfg.block_size));
    for (std::size_t n = 0; n < frame.size(); ++n) {
      frame[n] = window[n] * buf.left[m * static_cast<std::size_t>(cfg.hop) + n];
    }
    const auto oracle = tt::dft_one_sided(frame);

    double norm = 0.0;
    double diff = 0.0;
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      norm = std::max(norm, std::abs(oracle[k]));
      diff = std::max(diff, std::abs(oracle[k] - spectra.left(m, k)));
    }
    CHECK(diff / norm < 1e-9);
  }
}

TEST_CASE("one-sided spectrum satisfies Parseval per frame") {
  const StftConfig cfg;
  const StereoBuffer buf = noise_buffer(8192, 102);
  const ChannelSpectra spectra = stft_analyze(buf, cfg);
  const auto window = hann_window(cfg.block_size);

  for (std::size_t m = 0; m < spectra.left.rows(); ++m) {
    double time_energy = 0.0;
    for (std::size_t n = 0; n < window.size(); ++n) {
      const double s = window[n] * buf.left[m * static_cast<std::size_t>(cfg.hop) + n];
      time_energy += s * s;
    }
    // Conjugate-symmetry weights: DC and Nyquist once, everything else twice.
    double spectral_energy = std::norm(spectra.left(m, 0));
    spectral_energy += std::norm(spectra.left(m, spectra.left.cols() - 1));
    for (std::size_t k = 1; k + 1 < spectra.left.cols(); ++k) {
      spectral_energy += 2.0 * std::norm(spectra.left(m, k));
    }
    spectral_energy /= static_cast<double>(cfg.block_size);
    CHECK(std::abs(spectral_energy - time_energy) <= 1e-9 * time_energy);
  }
}

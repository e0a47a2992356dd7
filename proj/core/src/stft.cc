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

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "dirloud/errors.h"

namespace dirloud {

namespace {

// FFTW plan creation/destruction is not thread safe; execution is.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

class RealFft {
 public:
  explicit RealFft(int size) : size_(size), in_(size), out_(size / 2 + 1) {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    plan_ = fftw_plan_dft_r2c_1d(size_, in_.data(),
                                 reinterpret_cast<fftw_complex*>(out_.data()), FFTW_ESTIMATE);
  }

  ~RealFft() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan_);
  }

  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  double* input() { return in_.data(); }

  const std::vector<std::complex<double>>& transform() {
    fftw_execute(plan_);
    return out_;
  }

 private:
  int size_;
  std::vector<double> in_;
  std::vector<std::complex<double>> out_;
  fftw_plan plan_;
};

}  // namespace

void StftConfig::validate() const {
  if (block_size <= 0) {
    throw ConfigError("block size must be positive, got " + std::to_string(block_size));
  }
  if (hop <= 0 || hop > block_size) {
    throw ConfigError("hop must be in (0, block], got hop " + std::to_string(hop) + " for block " +
                      std::to_string(block_size));
  }
  if (sample_rate <= 0) {
    throw ConfigError("sample rate must be positive, got " + std::to_string(sample_rate));
  }
}

std::size_t stft_frame_count(std::size_t n, const StftConfig& cfg) {
  cfg.validate();
  const auto block = static_cast<std::size_t>(cfg.block_size);
  if (n < block) {
    throw InputTooShortError("input of " + std::to_string(n) + " samples is shorter than one " +
                             std::to_string(cfg.block_size) + "-sample block");
  }
  return (n - block) / static_cast<std::size_t>(cfg.hop) + 1;
}

std::vector<double> hann_window(int length) {
  std::vector<double> window(static_cast<std::size_t>(length));
  if (length == 1) {
    window[0] = 1.0;
    return window;
  }
  for (int n = 0; n < length; ++n) {
    window[static_cast<std::size_t>(n)] =
        0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / (length - 1)));
  }
  return window;
}

ChannelSpectra stft_analyze(const StereoBuffer& buf, const StftConfig& cfg) {
  const std::size_t frames = stft_frame_count(buf.frames(), cfg);
  const auto block = static_cast<std::size_t>(cfg.block_size);
  const auto hop = static_cast<std::size_t>(cfg.hop);
  const auto bins = static_cast<std::size_t>(cfg.bins());
  const std::vector<double> window = hann_window(cfg.block_size);

  RealFft fft(cfg.block_size);
  ChannelSpectra spectra;
  for (auto [samples, spec] :
       {std::pair{&buf.left, &spectra.left}, std::pair{&buf.right, &spectra.right}}) {
    *spec = ComplexMatrix(frames, bins);
    for (std::size_t m = 0; m < frames; ++m) {
      double* in = fft.input();
      const double* x = samples->data() + m * hop;
      for (std::size_t n = 0; n < block; ++n) {
        in[n] = window[n] * x[n];
      }
      const auto& out = fft.transform();
      std::copy(out.begin(), out.end(), spec->row(m));
    }
  }
  return spectra;
}

}  // namespace dirloud

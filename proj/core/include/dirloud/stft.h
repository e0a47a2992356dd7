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

#ifndef DIRLOUD_STFT_H_
#define DIRLOUD_STFT_H_

#include <cstddef>
#include <vector>

#include "dirloud/matrix.h"
#include "dirloud/stereo_buffer.h"

namespace dirloud {

// Short-time analysis parameters. The defaults give 1024-sample Hann frames
// with 50% overlap: 21.3 ms time resolution at 48 kHz.
struct StftConfig {
  int block_size = 1024;
  int hop = 512;
  int sample_rate = 48000;

  int bins() const { return block_size / 2 + 1; }
  double block_duration_s() const { return static_cast<double>(block_size) / sample_rate; }
  double hop_duration_s() const { return static_cast<double>(hop) / sample_rate; }

  // Throws ConfigError unless block_size > 0, 0 < hop <= block_size and
  // sample_rate > 0.
  void validate() const;

  friend bool operator==(const StftConfig&, const StftConfig&) = default;
};

// floor((n - block) / hop) + 1. Samples after the last full block are
// dropped. Throws InputTooShortError when n < block_size.
std::size_t stft_frame_count(std::size_t n, const StftConfig& cfg);

// Symmetric Hann window of the given length, amplitude range 0..1.
std::vector<double> hann_window(int length);

struct ChannelSpectra {
  ComplexMatrix left;   // frames x (block_size/2 + 1)
  ComplexMatrix right;
};

// One-sided DFT of every Hann-windowed block of both channels; bins 0..M/2
// are retained including DC and Nyquist.
ChannelSpectra stft_analyze(const StereoBuffer& buf, const StftConfig& cfg);

}  // namespace dirloud

#endif  // DIRLOUD_STFT_H_

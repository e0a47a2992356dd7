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

#ifndef DIRLOUD_WAV_IO_H_
#define DIRLOUD_WAV_IO_H_

#include <filesystem>
#include <optional>
#include <string>

#include "dirloud/stereo_buffer.h"

namespace dirloud {

inline constexpr int kReferenceSampleRate = 48000;

enum class WavEncoding { kPcm16, kPcm24, kPcm32, kFloat32 };

// Reads a RIFF/WAVE file into a StereoBuffer. Integer PCM is scaled by
// 2^(bits-1), so negative full scale maps exactly to -1.0; 32-bit float
// samples are taken as-is. Accepts 16/24/32-bit integer PCM and 32-bit
// float, two channels only, and 48 kHz unless allow_any_rate is set.
// Unknown RIFF chunks are skipped.
StereoBuffer load_stereo_wav(const std::filesystem::path& path, bool allow_any_rate = false);

void write_stereo_wav(const std::filesystem::path& path, const StereoBuffer& buf,
                      WavEncoding encoding = WavEncoding::kFloat32);

struct AlignedPair {
  StereoBuffer ref;
  StereoBuffer sut;
  // Set when the input lengths differed by more than one STFT hop.
  std::optional<std::string> warning;
};

// Truncates both signals to the shorter length. Requires equal sample rates.
AlignedPair align_pair(const StereoBuffer& ref, const StereoBuffer& sut);

}  // namespace dirloud

#endif  // DIRLOUD_WAV_IO_H_

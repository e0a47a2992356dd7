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

#include "dirloud/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "dirloud/errors.h"

namespace dirloud {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits_per_sample = 0;
};

FmtChunk parse_fmt(const std::vector<unsigned char>& payload) {
  if (payload.size() < 16) {
    throw CorruptFileError("fmt chunk too small");
  }
  FmtChunk fmt;
  fmt.format = read_u16(payload.data());
  fmt.channels = read_u16(payload.data() + 2);
  fmt.sample_rate = read_u32(payload.data() + 4);
  fmt.block_align = read_u16(payload.data() + 12);
  fmt.bits_per_sample = read_u16(payload.data() + 14);
  if (fmt.format == kFormatExtensible) {
    // cbSize(2) validBits(2) channelMask(4) GUID(16); the GUID starts with
    // the effective format code.
    if (payload.size() < 18 + 2 + 2 + 4 + 16) {
      throw CorruptFileError("extensible fmt chunk too small");
    }
    fmt.format = read_u16(payload.data() + 18 + 2 + 4);
  }
  return fmt;
}

double decode_sample(const unsigned char* p, std::uint16_t format, int bytes) {
  if (format == kFormatFloat) {
    std::uint32_t raw = read_u32(p);
    float value;
    std::memcpy(&value, &raw, sizeof value);
    return static_cast<double>(value);
  }
  switch (bytes) {
    case 2: {
      auto v = static_cast<std::int16_t>(read_u16(p));
      return v / 32768.0;
    }
    case 3: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    default: {
      auto v = static_cast<std::int32_t>(read_u32(p));
      return v / 2147483648.0;
    }
  }
}

void append_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
}

void append_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
  out.push_back((v >> 16) & 0xFF);
  out.push_back((v >> 24) & 0xFF);
}

void append_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::int64_t quantize(double sample, double scale, std::int64_t lo, std::int64_t hi) {
  return std::clamp(static_cast<std::int64_t>(std::llrint(sample * scale)), lo, hi);
}

}  // namespace

StereoBuffer load_stereo_wav(const std::filesystem::path& path, bool allow_any_rate) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw FileIoError("cannot open " + path.string());
  }

  unsigned char riff[12];
  if (!file.read(reinterpret_cast<char*>(riff), sizeof riff)) {
    throw CorruptFileError(path.string() + ": not a RIFF/WAVE file");
  }
  if (std::memcmp(riff, "RIFF", 4) != 0 || std::memcmp(riff + 8, "WAVE", 4) != 0) {
    throw CorruptFileError(path.string() + ": not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  bool have_data = false;
  FmtChunk fmt;
  std::vector<unsigned char> data;

  unsigned char header[8];
  while (file.read(reinterpret_cast<char*>(header), sizeof header)) {
    const std::uint32_t size = read_u32(header + 4);
    if (std::memcmp(header, "fmt ", 4) == 0) {
      std::vector<unsigned char> payload(size);
      if (!file.read(reinterpret_cast<char*>(payload.data()), size)) {
        throw CorruptFileError(path.string() + ": truncated fmt chunk");
      }
      fmt = parse_fmt(payload);
      have_fmt = true;
    } else if (std::memcmp(header, "data", 4) == 0) {
      if (have_data) {
        throw CorruptFileError(path.string() + ": multiple data chunks");
      }
      data.resize(size);
      if (!file.read(reinterpret_cast<char*>(data.data()), size)) {
        throw CorruptFileError(path.string() + ": truncated data chunk");
      }
      have_data = true;
    } else {
      file.seekg(size, std::ios::cur);
      if (!file) {
        throw CorruptFileError(path.string() + ": truncated chunk");
      }
    }
    if (size % 2 == 1) {
      file.seekg(1, std::ios::cur);  // chunks are word aligned
    }
  }

  if (!have_fmt || !have_data) {
    throw CorruptFileError(path.string() + ": missing fmt or data chunk");
  }
  if (fmt.channels != 2) {
    throw NotStereoError(path.string() + ": expected 2 channels, got " +
                         std::to_string(fmt.channels));
  }
  const bool int_pcm = fmt.format == kFormatPcm &&
                       (fmt.bits_per_sample == 16 || fmt.bits_per_sample == 24 ||
                        fmt.bits_per_sample == 32);
  const bool float_pcm = fmt.format == kFormatFloat && fmt.bits_per_sample == 32;
  if (!int_pcm && !float_pcm) {
    throw UnsupportedEncodingError(path.string() + ": unsupported encoding (format " +
                                   std::to_string(fmt.format) + ", " +
                                   std::to_string(fmt.bits_per_sample) + " bit)");
  }
  if (fmt.sample_rate != kReferenceSampleRate && !allow_any_rate) {
    throw UnsupportedRateError(path.string() + ": sample rate " +
                               std::to_string(fmt.sample_rate) + " Hz, expected 48000 Hz");
  }
  if (fmt.sample_rate == 0) {
    throw CorruptFileError(path.string() + ": zero sample rate");
  }

  const int bytes_per_sample = fmt.bits_per_sample / 8;
  const std::size_t frame_bytes = static_cast<std::size_t>(bytes_per_sample) * 2;
  if (data.size() % frame_bytes != 0) {
    throw CorruptFileError(path.string() + ": data size is not a whole number of frames");
  }

  StereoBuffer buf;
  buf.sample_rate = static_cast<int>(fmt.sample_rate);
  const std::size_t frames = data.size() / frame_bytes;
  buf.left.resize(frames);
  buf.right.resize(frames);
  const unsigned char* p = data.data();
  for (std::size_t i = 0; i < frames; ++i) {
    buf.left[i] = decode_sample(p, fmt.format, bytes_per_sample);
    buf.right[i] = decode_sample(p + bytes_per_sample, fmt.format, bytes_per_sample);
    p += frame_bytes;
  }
  buf.validate();
  return buf;
}

void write_stereo_wav(const std::filesystem::path& path, const StereoBuffer& buf,
                      WavEncoding encoding) {
  buf.validate();

  int bytes_per_sample = 0;
  std::uint16_t format = kFormatPcm;
  switch (encoding) {
    case WavEncoding::kPcm16:
      bytes_per_sample = 2;
      break;
    case WavEncoding::kPcm24:
      bytes_per_sample = 3;
      break;
    case WavEncoding::kPcm32:
      bytes_per_sample = 4;
      break;
    case WavEncoding::kFloat32:
      bytes_per_sample = 4;
      format = kFormatFloat;
      break;
  }

  const std::size_t frames = buf.frames();
  const std::uint32_t data_size = static_cast<std::uint32_t>(frames * bytes_per_sample * 2);
  const bool is_float = format == kFormatFloat;
  const std::uint32_t fmt_size = is_float ? 18 : 16;
  // RIFF form: fmt chunk (+fact for float) + data chunk.
  std::uint32_t riff_size = 4 + (8 + fmt_size) + (8 + data_size);
  if (is_float) riff_size += 8 + 4;

  std::vector<unsigned char> out;
  out.reserve(12 + riff_size);
  append_tag(out, "RIFF");
  append_u32(out, riff_size);
  append_tag(out, "WAVE");
  append_tag(out, "fmt ");
  append_u32(out, fmt_size);
  append_u16(out, format);
  append_u16(out, 2);
  append_u32(out, static_cast<std::uint32_t>(buf.sample_rate));
  append_u32(out, static_cast<std::uint32_t>(buf.sample_rate) * bytes_per_sample * 2);
  append_u16(out, static_cast<std::uint16_t>(bytes_per_sample * 2));
  append_u16(out, static_cast<std::uint16_t>(bytes_per_sample * 8));
  if (is_float) {
    append_u16(out, 0);  // cbSize
    append_tag(out, "fact");
    append_u32(out, 4);
    append_u32(out, static_cast<std::uint32_t>(frames));
  }
  append_tag(out, "data");
  append_u32(out, data_size);

  for (std::size_t i = 0; i < frames; ++i) {
    for (double sample : {buf.left[i], buf.right[i]}) {
      switch (encoding) {
        case WavEncoding::kPcm16:
          append_u16(out, static_cast<std::uint16_t>(quantize(sample, 32768.0, -32768, 32767)));
          break;
        case WavEncoding::kPcm24: {
          auto v = static_cast<std::uint32_t>(quantize(sample, 8388608.0, -8388608, 8388607));
          out.push_back(v & 0xFF);
          out.push_back((v >> 8) & 0xFF);
          out.push_back((v >> 16) & 0xFF);
          break;
        }
        case WavEncoding::kPcm32:
          append_u32(out, static_cast<std::uint32_t>(
                              quantize(sample, 2147483648.0, -2147483648LL, 2147483647LL)));
          break;
        case WavEncoding::kFloat32: {
          const auto value = static_cast<float>(sample);
          std::uint32_t raw;
          std::memcpy(&raw, &value, sizeof raw);
          append_u32(out, raw);
          break;
        }
      }
    }
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw FileIoError("cannot create " + path.string());
  }
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) {
    throw FileIoError("write failed for " + path.string());
  }
}

AlignedPair align_pair(const StereoBuffer& ref, const StereoBuffer& sut) {
  if (ref.sample_rate != sut.sample_rate) {
    throw RateMismatchError("sample rates differ: " + std::to_string(ref.sample_rate) + " vs " +
                            std::to_string(sut.sample_rate));
  }
  const std::size_t n = std::min(ref.frames(), sut.frames());
  AlignedPair aligned;
  aligned.ref = ref;
  aligned.sut = sut;
  for (StereoBuffer* buf : {&aligned.ref, &aligned.sut}) {
    buf->left.resize(n);
    buf->right.resize(n);
  }
  const std::size_t diff = std::max(ref.frames(), sut.frames()) - n;
  constexpr std::size_t kHop = 512;
  if (diff > kHop) {
    aligned.warning = "signal lengths differ by " + std::to_string(diff) +
                      " samples (more than one 512-sample hop); both truncated to " +
                      std::to_string(n);
  }
  return aligned;
}

}  // namespace dirloud

// Copyright 2026 The Ecdither Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecdither/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>

#include "absl/strings/str_cat.h"

namespace ecdither {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint16_t ReadU16(std::span<const uint8_t> b, size_t at) {
  return static_cast<uint16_t>(b[at] | (b[at + 1] << 8));
}

uint32_t ReadU32(std::span<const uint8_t> b, size_t at) {
  return static_cast<uint32_t>(b[at]) |
         (static_cast<uint32_t>(b[at + 1]) << 8) |
         (static_cast<uint32_t>(b[at + 2]) << 16) |
         (static_cast<uint32_t>(b[at + 3]) << 24);
}

bool TagIs(std::span<const uint8_t> b, size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void PutTag(std::vector<uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

struct Format {
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits = 0;
};

}  // namespace

absl::StatusOr<Signal> DecodeWav(std::span<const uint8_t> bytes) {
  if (bytes.size() < 12) {
    if (bytes.size() >= 4 && !TagIs(bytes, 0, "RIFF")) {
      return absl::InvalidArgumentError("not a RIFF stream");
    }
    return absl::DataLossError("truncated RIFF header");
  }
  if (!TagIs(bytes, 0, "RIFF") || !TagIs(bytes, 8, "WAVE")) {
    return absl::InvalidArgumentError("not a RIFF/WAVE stream");
  }

  std::optional<Format> format;
  std::span<const uint8_t> data;
  bool have_data = false;
  size_t pos = 12;
  while (pos + 8 <= bytes.size() && !have_data) {
    const uint32_t chunk_size = ReadU32(bytes, pos + 4);
    const size_t body = pos + 8;
    if (TagIs(bytes, pos, "fmt ")) {
      if (chunk_size < 16 || body + chunk_size > bytes.size()) {
        return absl::DataLossError("truncated fmt chunk");
      }
      uint16_t tag = ReadU16(bytes, body);
      if (tag == kFormatExtensible && chunk_size >= 40) {
        // The first two bytes of the SubFormat GUID carry the format tag.
        tag = ReadU16(bytes, body + 24);
      }
      if (tag != kFormatPcm) {
        return absl::UnimplementedError(
            absl::StrCat("unsupported WAV format tag ", tag, " (PCM only)"));
      }
      format = Format{ReadU16(bytes, body + 2), ReadU32(bytes, body + 4),
                      ReadU16(bytes, body + 14)};
    } else if (TagIs(bytes, pos, "data")) {
      if (body + chunk_size > bytes.size()) {
        return absl::DataLossError(
            absl::StrCat("data chunk declares ", chunk_size, " bytes but only ",
                         bytes.size() - body, " remain"));
      }
      data = bytes.subspan(body, chunk_size);
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1u);
  }
  if (!format) {
    if (pos < bytes.size() || have_data) {
      return absl::InvalidArgumentError("missing fmt chunk");
    }
    return absl::DataLossError("stream ended before fmt chunk");
  }
  if (!have_data) {
    return absl::DataLossError("stream ended before data chunk");
  }
  if (format->bits != 8 && format->bits != 16) {
    return absl::OutOfRangeError(
        absl::StrCat("unsupported bit depth ", format->bits));
  }
  if (format->channels < 1 || format->channels > 2) {
    return absl::OutOfRangeError(
        absl::StrCat("unsupported channel count ", format->channels));
  }
  if (format->sample_rate == 0 || format->sample_rate > 1'000'000) {
    return absl::OutOfRangeError(
        absl::StrCat("unsupported sample rate ", format->sample_rate));
  }
  const size_t bytes_per_sample = format->bits / 8;
  const size_t frame_bytes = bytes_per_sample * format->channels;
  if (data.size() % frame_bytes != 0) {
    return absl::DataLossError("data chunk ends mid-frame");
  }

  const size_t frames = data.size() / frame_bytes;
  std::vector<double> samples(frames);
  for (size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (size_t c = 0; c < format->channels; ++c) {
      const size_t at = f * frame_bytes + c * bytes_per_sample;
      if (format->bits == 8) {
        sum += (static_cast<int>(data[at]) - 128) / 128.0;
      } else {
        sum += static_cast<int16_t>(ReadU16(data, at)) / 32768.0;
      }
    }
    samples[f] = sum / format->channels;
  }
  return Signal::Create(std::move(samples),
                        static_cast<int>(format->sample_rate));
}

absl::StatusOr<std::vector<uint8_t>> EncodeWav(const Signal& signal,
                                               int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    return absl::OutOfRangeError(
        absl::StrCat("unsupported bit depth ", bit_depth));
  }
  const uint32_t bytes_per_sample = static_cast<uint32_t>(bit_depth / 8);
  const uint32_t data_bytes =
      static_cast<uint32_t>(signal.size()) * bytes_per_sample;
  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes + 1);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_bytes + (data_bytes & 1u));
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);
  PutU32(out, static_cast<uint32_t>(signal.sample_rate()));
  PutU32(out, static_cast<uint32_t>(signal.sample_rate()) * bytes_per_sample);
  PutU16(out, static_cast<uint16_t>(bytes_per_sample));
  PutU16(out, static_cast<uint16_t>(bit_depth));
  PutTag(out, "data");
  PutU32(out, data_bytes);
  for (double s : signal.samples()) {
    if (bit_depth == 8) {
      // std::round rounds halfway cases away from zero.
      const double v = std::clamp(std::round(s * 128.0), -128.0, 127.0);
      out.push_back(static_cast<uint8_t>(static_cast<int>(v) + 128));
    } else {
      const double v = std::clamp(std::round(s * 32768.0), -32768.0, 32767.0);
      PutU16(out, static_cast<uint16_t>(static_cast<int16_t>(v)));
    }
  }
  if (data_bytes & 1u) out.push_back(0);
  return out;
}

absl::StatusOr<Signal> ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  auto signal = DecodeWav(bytes);
  if (!signal.ok()) {
    return absl::Status(
        signal.status().code(),
        absl::StrCat(path.string(), ": ", signal.status().message()));
  }
  return signal;
}

absl::Status WriteWav(const std::filesystem::path& path, const Signal& signal,
                      int bit_depth) {
  auto bytes = EncodeWav(signal, bit_depth);
  if (!bytes.ok()) return bytes.status();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out.write(reinterpret_cast<const char*>(bytes->data()),
            static_cast<std::streamsize>(bytes->size()));
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("short write to ", path.string()));
  }
  return absl::OkStatus();
}

}  // namespace ecdither

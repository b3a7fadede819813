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

#ifndef ECDITHER_WAV_H_
#define ECDITHER_WAV_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ecdither/signal.h"

namespace ecdither {

// RIFF/WAVE PCM, 8-bit unsigned or 16-bit signed, one or two channels.
// Stereo is averaged to mono on read. 8-bit maps byte v to (v - 128) / 128,
// 16-bit maps v to v / 32768; writing applies the inverse with
// round-half-away-from-zero and clamps to the representable range.
//
// Error codes are distinct per failure class:
//   kInvalidArgument  not a RIFF/WAVE stream, or missing fmt/data chunk
//   kUnimplemented    format tag is not PCM
//   kOutOfRange       unsupported bit depth or channel count
//   kDataLoss         truncated header or sample data
absl::StatusOr<Signal> DecodeWav(std::span<const uint8_t> bytes);
absl::StatusOr<std::vector<uint8_t>> EncodeWav(const Signal& signal,
                                               int bit_depth);

absl::StatusOr<Signal> ReadWav(const std::filesystem::path& path);
absl::Status WriteWav(const std::filesystem::path& path, const Signal& signal,
                      int bit_depth);

}  // namespace ecdither

#endif  // ECDITHER_WAV_H_

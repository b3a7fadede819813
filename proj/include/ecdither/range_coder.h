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

#ifndef ECDITHER_RANGE_CODER_H_
#define ECDITHER_RANGE_CODER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace ecdither {

// Adaptive order-0 range coder. Every symbol starts with frequency 1, each
// coded symbol adds kRangeCoderIncrement, and all frequencies are halved
// (rounding up) once the total passes kRangeCoderMaxTotal. The arithmetic
// core keeps a 32-bit range renormalized above 2^24 with carry propagation
// into already-emitted bytes.
//
// The stream carries no header; decoding needs the symbol count and alphabet
// size used for encoding.
inline constexpr uint32_t kRangeCoderMaxAlphabet = 4096;
inline constexpr uint32_t kRangeCoderIncrement = 32;
inline constexpr uint32_t kRangeCoderMaxTotal = 1u << 16;

absl::StatusOr<std::vector<uint8_t>> RangeEncode(
    std::span<const uint32_t> symbols, uint32_t alphabet_size);

// Returns kDataLoss on a truncated or corrupt stream.
absl::StatusOr<std::vector<uint32_t>> RangeDecode(
    std::span<const uint8_t> bytes, uint32_t alphabet_size, size_t count);

// 8 * encoded bytes / symbol count.
absl::StatusOr<double> CodedBitsPerSymbol(std::span<const uint32_t> symbols,
                                          uint32_t alphabet_size);

}  // namespace ecdither

#endif  // ECDITHER_RANGE_CODER_H_

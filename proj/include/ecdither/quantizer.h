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

#ifndef ECDITHER_QUANTIZER_H_
#define ECDITHER_QUANTIZER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace ecdither {

// Uniform mid-rise quantizer over [-A, A) with 2^b levels and step
// 2A / 2^b.
class QuantConfig {
 public:
  static constexpr int kMaxBits = 12;

  static absl::StatusOr<QuantConfig> Create(int bits, double full_scale);

  // 3 bits, A = 1.
  QuantConfig() = default;

  int bits() const { return bits_; }
  double full_scale() const { return full_scale_; }
  double step() const {
    return 2.0 * full_scale_ / static_cast<double>(levels());
  }
  uint32_t levels() const { return 1u << bits_; }

  // Index k = clamp(floor((s + A) / step), 0, levels - 1). Requires finite s.
  uint32_t Index(double s) const;
  // -A + (k + 0.5) * step.
  double Level(uint32_t k) const;

 private:
  QuantConfig(int bits, double full_scale)
      : bits_(bits), full_scale_(full_scale) {}

  int bits_ = 3;
  double full_scale_ = 1.0;
};

struct Quantized {
  std::vector<uint32_t> symbols;
  std::vector<double> reconstruction;
};

// Values at or above A and below -A saturate to the end levels. Rejects
// non-finite input.
absl::StatusOr<Quantized> Quantize(std::span<const double> samples,
                                   const QuantConfig& config);

}  // namespace ecdither

#endif  // ECDITHER_QUANTIZER_H_

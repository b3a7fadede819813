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

#include "ecdither/quantizer.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ecdither {

absl::StatusOr<QuantConfig> QuantConfig::Create(int bits, double full_scale) {
  if (bits < 1 || bits > kMaxBits) {
    return absl::InvalidArgumentError(
        absl::StrCat("bits must be in [1, ", kMaxBits, "], got ", bits));
  }
  if (!(full_scale > 0.0) || !std::isfinite(full_scale)) {
    return absl::InvalidArgumentError(
        absl::StrCat("full scale must be positive, got ", full_scale));
  }
  return QuantConfig(bits, full_scale);
}

uint32_t QuantConfig::Index(double s) const {
  const double cell = std::floor((s + full_scale_) / step());
  const double top = static_cast<double>(levels() - 1);
  return static_cast<uint32_t>(std::clamp(cell, 0.0, top));
}

double QuantConfig::Level(uint32_t k) const {
  return -full_scale_ + (static_cast<double>(k) + 0.5) * step();
}

absl::StatusOr<Quantized> Quantize(std::span<const double> samples,
                                   const QuantConfig& config) {
  Quantized out;
  out.symbols.resize(samples.size());
  out.reconstruction.resize(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite quantizer input at index ", i));
    }
    const uint32_t k = config.Index(samples[i]);
    out.symbols[i] = k;
    out.reconstruction[i] = config.Level(k);
  }
  return out;
}

}  // namespace ecdither

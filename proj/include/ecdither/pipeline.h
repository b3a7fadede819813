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

#ifndef ECDITHER_PIPELINE_H_
#define ECDITHER_PIPELINE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/dither.h"
#include "ecdither/quantizer.h"
#include "ecdither/signal.h"

namespace ecdither {

enum class DitherMode {
  kNonSubtractive,  // x_hat = Q(x + v)
  kSubtractive,     // x_hat = Q(x + v) - v
};

std::string_view DitherModeName(DitherMode mode);

struct QuantResult {
  Signal output;
  std::vector<double> dither;
  std::vector<double> pre_quant;
  std::vector<uint32_t> symbols;
};

// Add dither, quantize, optionally subtract the dither again. Symbols are
// always the quantizer indices.
absl::StatusOr<QuantResult> RunPipeline(const Signal& x,
                                        const DitherSpec& dither,
                                        const QuantConfig& quant,
                                        DitherMode mode);

// Same, with a caller-supplied dither sequence of the signal's length.
absl::StatusOr<QuantResult> RunPipelineWithDither(std::span<const double> x,
                                                  int sample_rate,
                                                  std::vector<double> dither,
                                                  const QuantConfig& quant,
                                                  DitherMode mode);

}  // namespace ecdither

#endif  // ECDITHER_PIPELINE_H_

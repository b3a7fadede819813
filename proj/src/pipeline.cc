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

#include "ecdither/pipeline.h"

#include "absl/status/status.h"

namespace ecdither {

std::string_view DitherModeName(DitherMode mode) {
  return mode == DitherMode::kSubtractive ? "sd" : "nsd";
}

absl::StatusOr<QuantResult> RunPipelineWithDither(std::span<const double> x,
                                                  int sample_rate,
                                                  std::vector<double> dither,
                                                  const QuantConfig& quant,
                                                  DitherMode mode) {
  if (dither.size() != x.size()) {
    return absl::InvalidArgumentError("dither length differs from signal");
  }
  QuantResult result;
  result.pre_quant.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) result.pre_quant[i] = x[i] + dither[i];

  auto quantized = Quantize(result.pre_quant, quant);
  if (!quantized.ok()) return quantized.status();

  std::vector<double> output = std::move(quantized->reconstruction);
  if (mode == DitherMode::kSubtractive) {
    for (size_t i = 0; i < output.size(); ++i) output[i] -= dither[i];
  }
  auto signal = Signal::Create(std::move(output), sample_rate);
  if (!signal.ok()) return signal.status();
  result.output = *std::move(signal);
  result.symbols = std::move(quantized->symbols);
  result.dither = std::move(dither);
  return result;
}

absl::StatusOr<QuantResult> RunPipeline(const Signal& x,
                                        const DitherSpec& dither,
                                        const QuantConfig& quant,
                                        DitherMode mode) {
  if (x.empty()) return absl::InvalidArgumentError("empty signal");
  auto v = DrawDither(dither, quant.step(), x.size());
  if (!v.ok()) return v.status();
  return RunPipelineWithDither(x.samples(), x.sample_rate(), *std::move(v),
                               quant, mode);
}

}  // namespace ecdither

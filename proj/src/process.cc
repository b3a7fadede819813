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

#include "ecdither/process.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ecdither/contour.h"

namespace ecdither {

absl::StatusOr<ProcessOutput> ProcessSignal(const Signal& x,
                                            const ProcessParams& params) {
  ProcessOutput out;
  if (params.normalize) {
    auto normalized = NormalizePeak(x);
    if (!normalized.ok()) return normalized.status();
    out.input = *std::move(normalized);
  } else {
    out.input = x;
  }

  absl::StatusOr<QuantResult> result =
      params.shaping.has_value()
          ? Shape(out.input, params.dither, params.quant, *params.shaping,
                  params.mode)
          : RunPipeline(out.input, params.dither, params.quant, params.mode);
  if (!result.ok()) return result.status();
  out.result = *std::move(result);

  const ContourTable& contour =
      params.shaping.has_value() ? params.shaping->contour : DefaultContour();
  auto metrics = ComputeMetricRow(out.input, out.result, params.quant, contour,
                                  params.dither.alpha, params.fundamental_hz);
  if (!metrics.ok()) return metrics.status();
  out.metrics = *metrics;

  const double a = params.quant.full_scale();
  for (size_t i = 0; i < out.input.size(); ++i) {
    const double e = std::abs(out.result.output[i] - out.input[i]);
    out.max_abs_error = std::max(out.max_abs_error, e);
    const double s = out.result.pre_quant[i];
    if (s >= -a && s < a) {
      out.max_abs_error_unclipped = std::max(out.max_abs_error_unclipped, e);
    } else {
      ++out.clipped_samples;
    }
  }
  return out;
}

}  // namespace ecdither

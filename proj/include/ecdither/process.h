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

#ifndef ECDITHER_PROCESS_H_
#define ECDITHER_PROCESS_H_

#include <cstddef>
#include <optional>

#include "absl/status/statusor.h"
#include "ecdither/dither.h"
#include "ecdither/metric_row.h"
#include "ecdither/pipeline.h"
#include "ecdither/quantizer.h"
#include "ecdither/shaper.h"
#include "ecdither/signal.h"

namespace ecdither {

// Parameters for one pipeline pass, as accepted by the CLI `process`
// command, the service and stored presets.
struct ProcessParams {
  DitherSpec dither;
  QuantConfig quant;
  DitherMode mode = DitherMode::kSubtractive;
  // Noise shaping is off when unset.
  std::optional<ShapingConfig> shaping;
  std::optional<double> fundamental_hz;
  // Scale the input to peak 1 before processing.
  bool normalize = true;
};

struct ProcessOutput {
  // The input as processed, after optional normalization.
  Signal input;
  QuantResult result;
  MetricRow metrics;
  double max_abs_error = 0.0;
  // Over samples where x + v stayed inside [-A, A).
  double max_abs_error_unclipped = 0.0;
  size_t clipped_samples = 0;
};

// Runs the plain or shaped pipeline and computes its MetricRow. Shaping
// divergence comes back as kAborted.
absl::StatusOr<ProcessOutput> ProcessSignal(const Signal& x,
                                            const ProcessParams& params);

}  // namespace ecdither

#endif  // ECDITHER_PROCESS_H_

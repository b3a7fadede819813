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

#ifndef ECDITHER_METRIC_ROW_H_
#define ECDITHER_METRIC_ROW_H_

#include <optional>

#include "absl/status/statusor.h"
#include "ecdither/contour.h"
#include "ecdither/perceptual.h"
#include "ecdither/pipeline.h"
#include "ecdither/quantizer.h"
#include "ecdither/signal.h"
#include "ecdither/spectrum.h"

namespace ecdither {

struct MetricRow {
  double alpha = 0.0;
  double entropy_bits = 0.0;
  double cond_entropy_bits = 0.0;
  double mse = 0.0;
  double coded_bits_per_symbol = 0.0;
  // Perceptually weighted SNR proxy, not a perceptual quality score.
  double pwsnr_db = 0.0;
  // NaN when no fundamental was given.
  double spur_db = 0.0;
};

// Computes MetricRows for many pipeline results over one reference signal,
// sharing the weighting and spur analysis setup. Thread-safe.
class MetricEvaluator {
 public:
  static absl::StatusOr<MetricEvaluator> Create(
      const Signal& reference, const QuantConfig& quant,
      const ContourTable& contour,
      std::optional<double> fundamental_hz = std::nullopt);

  absl::StatusOr<MetricRow> Evaluate(double alpha,
                                     const QuantResult& result) const;

 private:
  MetricEvaluator(const Signal& reference, const QuantConfig& quant,
                  PerceptualWeighting weighting,
                  std::optional<SpurAnalyzer> spurs);

  Signal reference_;
  QuantConfig quant_;
  PerceptualWeighting weighting_;
  double reference_power_;
  std::optional<SpurAnalyzer> spurs_;
};

absl::StatusOr<MetricRow> ComputeMetricRow(
    const Signal& reference, const QuantResult& result,
    const QuantConfig& quant, const ContourTable& contour, double alpha,
    std::optional<double> fundamental_hz = std::nullopt);

}  // namespace ecdither

#endif  // ECDITHER_METRIC_ROW_H_

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

#include "ecdither/metric_row.h"

#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ecdither/entropy.h"
#include "ecdither/range_coder.h"

namespace ecdither {

MetricEvaluator::MetricEvaluator(const Signal& reference,
                                 const QuantConfig& quant,
                                 PerceptualWeighting weighting,
                                 std::optional<SpurAnalyzer> spurs)
    : reference_(reference),
      quant_(quant),
      weighting_(std::move(weighting)),
      reference_power_(weighting_.WeightedPower(reference.samples())),
      spurs_(std::move(spurs)) {}

absl::StatusOr<MetricEvaluator> MetricEvaluator::Create(
    const Signal& reference, const QuantConfig& quant,
    const ContourTable& contour, std::optional<double> fundamental_hz) {
  if (reference.size() < kMinPwsnrLength) {
    return absl::InvalidArgumentError(
        absl::StrCat("metrics need at least ", kMinPwsnrLength,
                     " samples, got ", reference.size()));
  }
  std::optional<SpurAnalyzer> spurs;
  if (fundamental_hz.has_value()) {
    auto analyzer = SpurAnalyzer::Create(reference.sample_rate(),
                                         reference.size(), *fundamental_hz);
    if (!analyzer.ok()) return analyzer.status();
    spurs = *std::move(analyzer);
  }
  return MetricEvaluator(
      reference, quant,
      PerceptualWeighting(contour, reference.sample_rate(), reference.size()),
      std::move(spurs));
}

absl::StatusOr<MetricRow> MetricEvaluator::Evaluate(
    double alpha, const QuantResult& result) const {
  const Signal& out = result.output;
  if (out.size() != reference_.size() ||
      result.symbols.size() != reference_.size()) {
    return absl::InvalidArgumentError(absl::StrCat("result length ", out.size(),
                                                   " does not match reference ",
                                                   reference_.size()));
  }
  MetricRow row;
  row.alpha = alpha;
  const uint32_t m = quant_.levels();

  auto h = Entropy(result.symbols, m);
  if (!h.ok()) return h.status();
  row.entropy_bits = *h;
  auto h1 = ConditionalEntropy(result.symbols, m);
  if (!h1.ok()) return h1.status();
  row.cond_entropy_bits = *h1;
  auto mse = MeanSquaredError(reference_.samples(), out.samples());
  if (!mse.ok()) return mse.status();
  row.mse = *mse;
  auto coded = CodedBitsPerSymbol(result.symbols, m);
  if (!coded.ok()) return coded.status();
  row.coded_bits_per_symbol = *coded;

  std::vector<double> error(out.size());
  for (size_t i = 0; i < out.size(); ++i) error[i] = out[i] - reference_[i];
  row.pwsnr_db =
      PwsnrFromPowers(reference_power_, weighting_.WeightedPower(error));
  row.spur_db = spurs_.has_value() ? spurs_->Measure(out.samples())
                                   : std::numeric_limits<double>::quiet_NaN();
  return row;
}

absl::StatusOr<MetricRow> ComputeMetricRow(
    const Signal& reference, const QuantResult& result,
    const QuantConfig& quant, const ContourTable& contour, double alpha,
    std::optional<double> fundamental_hz) {
  auto evaluator =
      MetricEvaluator::Create(reference, quant, contour, fundamental_hz);
  if (!evaluator.ok()) return evaluator.status();
  return evaluator->Evaluate(alpha, result);
}

}  // namespace ecdither

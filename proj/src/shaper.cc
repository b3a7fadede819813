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

#include "ecdither/shaper.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ecdither/convolver.h"
#include "ecdither/rng.h"

namespace ecdither {

absl::StatusOr<Shaper> Shaper::Create(const ShapingConfig& config,
                                      double sample_rate) {
  if (config.iterations < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "shaping iterations must be >= 1, got ", config.iterations));
  }
  if (!(config.relaxation > 0.0 && config.relaxation <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "shaping relaxation must be in (0, 1], got ", config.relaxation));
  }
  auto filter = DesignFir(config.contour, config.order, sample_rate);
  if (!filter.ok()) return filter.status();
  return Shaper(*std::move(filter), config.iterations, config.redraw_dither,
                config.relaxation);
}

Shaper::Shaper(FirFilter filter, int iterations, bool redraw_dither,
               double relaxation)
    : filter_(std::move(filter)),
      iterations_(std::max(iterations, 1)),
      redraw_dither_(redraw_dither),
      relaxation_(std::clamp(relaxation, 0.0, 1.0)) {}

absl::StatusOr<QuantResult> Shaper::Run(
    const Signal& x, const DitherSpec& dither, const QuantConfig& quant,
    DitherMode mode,
    const std::function<void(const ShapingStep&)>& observer) const {
  if (x.empty()) return absl::InvalidArgumentError("empty signal");
  const size_t n = x.size();
  auto first_draw = DrawDither(dither, quant.step(), n);
  if (!first_draw.ok()) return first_draw.status();

  ZeroPhaseConvolver convolver(filter_, n);
  const double limit = 4.0 * quant.full_scale();
  std::vector<double> input(x.samples().begin(), x.samples().end());
  std::vector<double> error(n);
  std::vector<double> filtered(n);

  // Pass p quantizes x^{p-1}; passes 1..n drive the feedback and pass n + 1
  // produces the result.
  auto run_pass = [&](int p) -> absl::StatusOr<QuantResult> {
    std::vector<double> v;
    if (redraw_dither_ && p > 1) {
      DitherSpec fresh = dither;
      fresh.seed = MixSeed(dither.seed, static_cast<uint64_t>(p));
      auto drawn = DrawDither(fresh, quant.step(), n);
      if (!drawn.ok()) return drawn.status();
      v = *std::move(drawn);
    } else {
      v = *first_draw;
    }
    return RunPipelineWithDither(input, x.sample_rate(), std::move(v), quant,
                                 mode);
  };

  for (int t = 1; t <= iterations_; ++t) {
    auto pass = run_pass(t);
    if (!pass.ok()) return pass.status();
    double power = 0.0;
    for (size_t i = 0; i < n; ++i) {
      error[i] = pass->output[i] - x[i];
      power += error[i] * error[i];
    }
    ShapingStep step{t, power / static_cast<double>(n), 0.0};
    convolver.Apply(error, filtered);
    for (size_t i = 0; i < n; ++i) {
      const double target = x[i] - filtered[i];
      input[i] = relaxation_ == 1.0
                     ? target
                     : input[i] + relaxation_ * (target - input[i]);
      step.peak_input = std::max(step.peak_input, std::abs(input[i]));
    }
    if (observer) observer(step);
    if (!(step.peak_input <= limit)) {
      return absl::AbortedError(absl::StrCat(
          "noise shaping diverged at iteration ", t,
          ": max |x^t| = ", step.peak_input, " exceeds 4A = ", limit));
    }
  }
  return run_pass(iterations_ + 1);
}

absl::StatusOr<QuantResult> Shape(const Signal& x, const DitherSpec& dither,
                                  const QuantConfig& quant,
                                  const ShapingConfig& shaping,
                                  DitherMode mode) {
  auto shaper = Shaper::Create(shaping, x.sample_rate());
  if (!shaper.ok()) return shaper.status();
  return shaper->Run(x, dither, quant, mode);
}

}  // namespace ecdither

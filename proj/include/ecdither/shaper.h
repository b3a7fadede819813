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

#ifndef ECDITHER_SHAPER_H_
#define ECDITHER_SHAPER_H_

#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/contour.h"
#include "ecdither/dither.h"
#include "ecdither/fir.h"
#include "ecdither/pipeline.h"
#include "ecdither/quantizer.h"
#include "ecdither/signal.h"

namespace ecdither {

inline constexpr int kDefaultShapingIterations = 100;

struct ShapingConfig {
  ContourTable contour = DefaultContour();
  int order = kDefaultFirOrder;
  int iterations = kDefaultShapingIterations;
  // Draw fresh dither (substream MixSeed(seed, pass)) on every pass
  // instead of reusing the first draw. Off by default: the correction
  // x - h*e only cancels error that repeats from one pass to the next.
  bool redraw_dither = false;
  // Step size mu of the update x^t = (1 - mu) x^{t-1} + mu (x - h * e^t),
  // in (0, 1]. mu = 1 is the undamped loop, which with a fixed dither draw
  // tends to settle into a two-state cycle.
  double relaxation = 0.25;
};

struct ShapingStep {
  int iteration = 0;         // 1-based
  double error_power = 0.0;  // mean (x_hat^t - x)^2
  double peak_input = 0.0;   // max |x^t| fed to the next pass
};

// Iterative inverse-loudness noise shaping around the dither quantizer:
//
//   x^0 = x
//   for t = 1..n:
//     x_hat^t = pipeline(x^{t-1})
//     e^t     = x_hat^t - x
//     x^t     = (1 - mu) x^{t-1} + mu (x - h * e^t)   (zero-phase FIR h)
//
// and the result is pipeline(x^n), one pass beyond the last feedback step.
// Aborts with kAborted if any x^t leaves [-4A, 4A].
class Shaper {
 public:
  static absl::StatusOr<Shaper> Create(const ShapingConfig& config,
                                       double sample_rate);
  Shaper(FirFilter filter, int iterations, bool redraw_dither,
         double relaxation);

  const FirFilter& filter() const { return filter_; }
  int iterations() const { return iterations_; }

  // Thread-safe; each call owns its working buffers.
  absl::StatusOr<QuantResult> Run(
      const Signal& x, const DitherSpec& dither, const QuantConfig& quant,
      DitherMode mode,
      const std::function<void(const ShapingStep&)>& observer = {}) const;

 private:
  FirFilter filter_;
  int iterations_;
  bool redraw_dither_;
  double relaxation_;
};

absl::StatusOr<QuantResult> Shape(const Signal& x, const DitherSpec& dither,
                                  const QuantConfig& quant,
                                  const ShapingConfig& shaping,
                                  DitherMode mode);

}  // namespace ecdither

#endif  // ECDITHER_SHAPER_H_

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

#ifndef ECDITHER_DITHER_H_
#define ECDITHER_DITHER_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace ecdither {

enum class DitherKind {
  kNone,                // NPDF: no dither, alpha ignored.
  kRectangular,         // RPDF on [-step/2, step/2], alpha ignored.
  kTriangular,          // TPDF with support [-alpha*step, alpha*step].
  kModifiedTriangular,  // alpha * TPDF(alpha) + (1 - alpha) * delta(0).
};

// How a TPDF sample is formed from rectangular draws.
enum class TpdfConstruction {
  // out[0] = r[0], out[i] = r[i] - r[i-1] over one RPDF stream r on
  // [-alpha*step/2, alpha*step/2]. Triangular marginal with lag-1
  // autocorrelation -1/2 (high-pass spectrum).
  kDifference,
  // Sum of two fresh uniforms per sample; i.i.d. triangular.
  kIndependentSum,
};

std::string_view DitherKindName(DitherKind kind);
absl::StatusOr<DitherKind> ParseDitherKind(std::string_view name);
std::string_view TpdfConstructionName(TpdfConstruction construction);
absl::StatusOr<TpdfConstruction> ParseTpdfConstruction(std::string_view name);

struct DitherSpec {
  DitherKind kind = DitherKind::kNone;
  double alpha = 0.0;
  uint64_t seed = 0;
  TpdfConstruction construction = TpdfConstruction::kDifference;
};

// Draws n dither samples for quantizer step `step`. Deterministic in
// (spec, step, n).
//
// The modified-TPDF mixture zero branch emits exactly 0.0 so its point mass
// survives into the quantizer. Every modified-TPDF sample consumes three
// uniforms regardless of branch, which keeps streams for different alphas
// aligned sample by sample.
absl::StatusOr<std::vector<double>> DrawDither(const DitherSpec& spec,
                                               double step, size_t n);

}  // namespace ecdither

#endif  // ECDITHER_DITHER_H_

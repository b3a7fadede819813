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

#include "ecdither/dither.h"

#include <cmath>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ecdither/rng.h"

namespace ecdither {

std::string_view DitherKindName(DitherKind kind) {
  switch (kind) {
    case DitherKind::kNone:
      return "npdf";
    case DitherKind::kRectangular:
      return "rpdf";
    case DitherKind::kTriangular:
      return "tpdf";
    case DitherKind::kModifiedTriangular:
      return "mtpdf";
  }
  return "unknown";
}

absl::StatusOr<DitherKind> ParseDitherKind(std::string_view name) {
  if (name == "npdf" || name == "none") return DitherKind::kNone;
  if (name == "rpdf") return DitherKind::kRectangular;
  if (name == "tpdf") return DitherKind::kTriangular;
  if (name == "mtpdf" || name == "modified_tpdf") {
    return DitherKind::kModifiedTriangular;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown dither kind '", std::string(name),
                   "' (expected npdf|rpdf|tpdf|mtpdf)"));
}

std::string_view TpdfConstructionName(TpdfConstruction construction) {
  return construction == TpdfConstruction::kDifference ? "difference"
                                                       : "independent_sum";
}

absl::StatusOr<TpdfConstruction> ParseTpdfConstruction(std::string_view name) {
  if (name == "difference") return TpdfConstruction::kDifference;
  if (name == "independent_sum") return TpdfConstruction::kIndependentSum;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown TPDF construction '", std::string(name),
                   "' (expected difference|independent_sum)"));
}

absl::StatusOr<std::vector<double>> DrawDither(const DitherSpec& spec,
                                               double step, size_t n) {
  if (n == 0) return absl::InvalidArgumentError("dither length must be >= 1");
  if (!(step > 0.0) || !std::isfinite(step)) {
    return absl::InvalidArgumentError("quantizer step must be positive");
  }
  if (!(spec.alpha >= 0.0 && spec.alpha <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha must be in [0, 1], got ", spec.alpha));
  }

  std::vector<double> out(n, 0.0);
  Rng rng(spec.seed);
  const double half = spec.alpha * step / 2.0;
  switch (spec.kind) {
    case DitherKind::kNone:
      break;
    case DitherKind::kRectangular:
      for (double& v : out) v = rng.Symmetric(step / 2.0);
      break;
    case DitherKind::kTriangular:
      if (spec.construction == TpdfConstruction::kDifference) {
        double previous = rng.Symmetric(half);
        out[0] = previous;
        for (size_t i = 1; i < n; ++i) {
          const double current = rng.Symmetric(half);
          out[i] = current - previous;
          previous = current;
        }
      } else {
        for (double& v : out) {
          const double a = rng.Symmetric(half);
          v = a + rng.Symmetric(half);
        }
      }
      break;
    case DitherKind::kModifiedTriangular:
      for (double& v : out) {
        const bool take = rng.Canonical() < spec.alpha;
        const double a = rng.Symmetric(half);
        const double b = rng.Symmetric(half);
        v = take ? a - b : 0.0;
      }
      break;
  }
  return out;
}

}  // namespace ecdither

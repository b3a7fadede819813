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

#include "ecdither/fir.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ecdither/convolver.h"

namespace ecdither {

absl::StatusOr<FirFilter> FirFilter::Create(std::vector<double> taps) {
  if (taps.size() < 3 || taps.size() % 2 == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "FIR needs an odd tap count >= 3 (even order), got ", taps.size()));
  }
  for (double t : taps) {
    if (!std::isfinite(t)) return absl::InvalidArgumentError("non-finite tap");
  }
  return FirFilter(std::move(taps));
}

double FirFilter::Magnitude(double hz, double sample_rate) const {
  const double omega = 2.0 * std::numbers::pi * hz / sample_rate;
  std::complex<double> sum = 0.0;
  for (size_t n = 0; n < taps_.size(); ++n) {
    sum += taps_[n] * std::polar(1.0, -omega * static_cast<double>(n));
  }
  return std::abs(sum);
}

absl::StatusOr<FirFilter> DesignFir(const ContourTable& contour, int order,
                                    double sample_rate) {
  constexpr int kGrid = kFirDesignGridPoints;
  constexpr int kPeriod = 2 * kGrid;
  if (order < 2 || order % 2 != 0 || order > kPeriod) {
    return absl::InvalidArgumentError(absl::StrCat(
        "FIR order must be even and in [2, ", kPeriod, "], got ", order));
  }
  if (!(sample_rate > 0.0)) {
    return absl::InvalidArgumentError("sample rate must be positive");
  }
  const double nyquist = sample_rate / 2.0;
  const ContourTable extended = contour.ExtendedTo(nyquist);

  std::vector<double> gain(kGrid + 1);
  for (int k = 0; k <= kGrid; ++k) {
    const double hz = nyquist * k / kGrid;
    gain[k] = std::pow(10.0, extended.GainDb(hz) / 20.0);
  }

  // Real, even desired response over kPeriod bins; its inverse DFT is the
  // zero-phase impulse response h0[m] = h0[-m].
  std::vector<double> cosine(kPeriod);
  for (int i = 0; i < kPeriod; ++i) {
    cosine[i] = std::cos(2.0 * std::numbers::pi * i / kPeriod);
  }
  const int half = order / 2;
  std::vector<double> taps(order + 1);
  for (int m = 0; m <= half; ++m) {
    double sum = gain[0] + ((m % 2 == 0) ? gain[kGrid] : -gain[kGrid]);
    for (int k = 1; k < kGrid; ++k) {
      sum += 2.0 * gain[k] * cosine[(k * m) % kPeriod];
    }
    const double h = sum / kPeriod;
    taps[half + m] = h;
    taps[half - m] = h;
  }
  for (int i = 0; i <= order; ++i) {
    taps[i] *= 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / order);
  }
  return FirFilter::Create(std::move(taps));
}

std::vector<double> FilterZeroPhase(const FirFilter& filter,
                                    std::span<const double> x) {
  if (x.empty()) return {};
  ZeroPhaseConvolver convolver(filter, x.size());
  std::vector<double> y(x.size());
  convolver.Apply(x, y);
  return y;
}

}  // namespace ecdither

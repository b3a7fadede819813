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

#include "ecdither/perceptual.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ecdither/fft.h"

namespace ecdither {

PerceptualWeighting::PerceptualWeighting(const ContourTable& contour,
                                         int sample_rate, size_t length)
    : length_(length), fft_size_(NextPowerOfTwo(std::max<size_t>(length, 2))) {
  window_.resize(length);
  for (size_t i = 0; i < length; ++i) {
    window_[i] =
        length > 1
            ? 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (length - 1))
            : 1.0;
  }
  const ContourTable extended = contour.ExtendedTo(sample_rate / 2.0);
  const size_t bins = fft_size_ / 2 + 1;
  weight_.resize(bins);
  for (size_t k = 0; k < bins; ++k) {
    const double hz = static_cast<double>(k) * sample_rate / fft_size_;
    // Interior bins stand for their negative-frequency twins as well.
    const double fold = (k == 0 || k == bins - 1) ? 1.0 : 2.0;
    weight_[k] = fold * std::pow(10.0, extended.GainDb(hz) / 10.0);
  }
}

double PerceptualWeighting::WeightedPower(std::span<const double> x) const {
  RealFft fft(fft_size_);
  std::span<double> time = fft.time();
  for (size_t i = 0; i < length_; ++i) time[i] = x[i] * window_[i];
  std::fill(time.begin() + static_cast<std::ptrdiff_t>(length_), time.end(),
            0.0);
  fft.Forward();
  double sum = 0.0;
  std::span<const std::complex<double>> freq = fft.freq();
  for (size_t k = 0; k < freq.size(); ++k)
    sum += weight_[k] * std::norm(freq[k]);
  return sum;
}

double PwsnrFromPowers(double signal_power, double error_power) {
  if (error_power <= 0.0) return kPwsnrCapDb;
  if (signal_power <= 0.0) return -kPwsnrCapDb;
  return std::clamp(10.0 * std::log10(signal_power / error_power), -kPwsnrCapDb,
                    kPwsnrCapDb);
}

absl::StatusOr<double> Pwsnr(const Signal& x, const Signal& x_hat,
                             const ContourTable& contour) {
  if (x.size() != x_hat.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("length mismatch: ", x.size(), " vs ", x_hat.size()));
  }
  if (x.size() < kMinPwsnrLength) {
    return absl::InvalidArgumentError(absl::StrCat(
        "PWSNR needs at least ", kMinPwsnrLength, " samples, got ", x.size()));
  }
  PerceptualWeighting weighting(contour, x.sample_rate(), x.size());
  std::vector<double> error(x.size());
  for (size_t i = 0; i < x.size(); ++i) error[i] = x_hat[i] - x[i];
  return PwsnrFromPowers(weighting.WeightedPower(x.samples()),
                         weighting.WeightedPower(error));
}

}  // namespace ecdither

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

#include "ecdither/spectrum.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ecdither/fft.h"

namespace ecdither {

absl::StatusOr<SpurAnalyzer> SpurAnalyzer::Create(int sample_rate,
                                                  size_t length,
                                                  double fundamental_hz) {
  if (sample_rate <= 0) return absl::InvalidArgumentError("bad sample rate");
  if (length < 16) {
    return absl::InvalidArgumentError(
        absl::StrCat("spur analysis needs at least 16 samples, got ", length));
  }
  if (!std::isfinite(fundamental_hz) || fundamental_hz <= 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("fundamental must be positive, got ", fundamental_hz));
  }
  SpurAnalyzer a;
  a.length_ = length;
  a.fft_size_ = NextPowerOfTwo(length);
  const size_t bins = a.fft_size_ / 2 + 1;
  const double bin_hz = static_cast<double>(sample_rate) / a.fft_size_;
  const double lobe =
      std::sqrt(1.0 + std::pow(kKaiserBeta / std::numbers::pi, 2)) *
      static_cast<double>(a.fft_size_) / length;
  a.half_width_ = static_cast<size_t>(std::ceil(lobe)) + 1;

  const double f0_bins = fundamental_hz / bin_hz;
  if (f0_bins < 2.0 * a.half_width_ + 1.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "fundamental ", fundamental_hz,
        " Hz is below the analysis resolution (",
        (2.0 * a.half_width_ + 1.0) * bin_hz, " Hz at ", length, " samples)"));
  }

  std::vector<size_t> centers;
  for (int k = 1; k <= kMaxHarmonic; ++k) {
    const double bin = std::round(k * f0_bins);
    if (bin + a.half_width_ >= static_cast<double>(bins - 1)) break;
    centers.push_back(static_cast<size_t>(bin));
  }
  if (centers.size() < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "no harmonic of ", fundamental_hz, " Hz lies below Nyquist"));
  }
  a.harmonic_bins_.assign(centers.begin() + 1, centers.end());

  a.floor_mask_.assign(bins, true);
  for (size_t k = 0; k <= a.half_width_ && k < bins; ++k)
    a.floor_mask_[k] = false;
  for (size_t c : centers) {
    for (size_t k = c - a.half_width_; k <= c + a.half_width_; ++k) {
      a.floor_mask_[k] = false;
    }
  }

  a.window_.resize(length);
  const double norm = std::cyl_bessel_i(0.0, kKaiserBeta);
  for (size_t i = 0; i < length; ++i) {
    const double r = 2.0 * i / (length - 1) - 1.0;
    a.window_[i] =
        std::cyl_bessel_i(0.0,
                          kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - r * r))) /
        norm;
  }
  return a;
}

double SpurAnalyzer::Measure(std::span<const double> x) const {
  RealFft fft(fft_size_);
  std::span<double> time = fft.time();
  for (size_t i = 0; i < length_; ++i) time[i] = x[i] * window_[i];
  std::fill(time.begin() + static_cast<std::ptrdiff_t>(length_), time.end(),
            0.0);
  fft.Forward();
  std::span<const std::complex<double>> freq = fft.freq();
  std::vector<double> power(freq.size());
  double peak = 0.0;
  for (size_t k = 0; k < freq.size(); ++k) {
    power[k] = std::norm(freq[k]);
    peak = std::max(peak, power[k]);
  }
  if (peak <= 0.0) return 0.0;

  std::vector<double> floor_bins;
  floor_bins.reserve(power.size());
  for (size_t k = 0; k < power.size(); ++k) {
    if (floor_mask_[k]) floor_bins.push_back(power[k]);
  }
  double floor = 0.0;
  if (!floor_bins.empty()) {
    auto mid =
        floor_bins.begin() + static_cast<std::ptrdiff_t>(floor_bins.size() / 2);
    std::nth_element(floor_bins.begin(), mid, floor_bins.end());
    floor = *mid;
  }
  floor = std::max(floor, peak * std::pow(10.0, -kDynamicRangeDb / 10.0));

  double worst = 0.0;
  for (size_t c : harmonic_bins_) {
    for (size_t k = c - half_width_; k <= c + half_width_; ++k) {
      worst = std::max(worst, power[k]);
    }
  }
  return 10.0 * std::log10(std::max(worst, floor) / floor);
}

absl::StatusOr<double> SpectrumSpurs(const Signal& x, double fundamental_hz) {
  auto analyzer =
      SpurAnalyzer::Create(x.sample_rate(), x.size(), fundamental_hz);
  if (!analyzer.ok()) return analyzer.status();
  return analyzer->Measure(x.samples());
}

DisplaySpectrum ComputeDisplaySpectrum(std::span<const double> x,
                                       int sample_rate, size_t max_points) {
  DisplaySpectrum out;
  if (x.empty() || sample_rate <= 0 || max_points == 0) return out;
  const size_t n = NextPowerOfTwo(std::max<size_t>(x.size(), 2));
  RealFft fft(n);
  std::span<double> time = fft.time();
  std::fill(time.begin(), time.end(), 0.0);
  double window_sum = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double w =
        x.size() > 1
            ? 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (x.size() - 1))
            : 1.0;
    time[i] = x[i] * w;
    window_sum += w;
  }
  fft.Forward();
  std::span<const std::complex<double>> freq = fft.freq();
  const size_t group = (freq.size() + max_points - 1) / max_points;
  const double scale = window_sum > 0.0 ? 2.0 / window_sum : 1.0;
  for (size_t start = 0; start < freq.size(); start += group) {
    const size_t end = std::min(freq.size(), start + group);
    size_t best = start;
    for (size_t k = start + 1; k < end; ++k) {
      if (std::abs(freq[k]) > std::abs(freq[best])) best = k;
    }
    const double amp = std::abs(freq[best]) * scale;
    out.freq_hz.push_back(static_cast<double>(best) * sample_rate / n);
    out.level_db.push_back(amp > 1e-15 ? 20.0 * std::log10(amp) : -300.0);
  }
  return out;
}

}  // namespace ecdither

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

#ifndef ECDITHER_SPECTRUM_H_
#define ECDITHER_SPECTRUM_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/signal.h"

namespace ecdither {

// Harmonic spur measurement for tonal signals.
//
// The block is Kaiser-windowed (beta 30) and zero-padded to a power of two.
// Each harmonic k = 2..10 below Nyquist is read as the strongest bin within
// one mainlobe half-width of k * f0. The noise floor is the median of all
// bins outside the DC band and every harmonic band, but never less than
// 240 dB below the strongest bin; that is the range double-precision
// analysis can resolve, and it keeps a numerically exact sine from reading
// window leakage as spurs. The result is the largest harmonic-to-floor ratio
// in dB.
class SpurAnalyzer {
 public:
  static constexpr double kKaiserBeta = 30.0;
  static constexpr double kDynamicRangeDb = 240.0;
  static constexpr int kMaxHarmonic = 10;

  // Fails when the fundamental is too low to separate its harmonics from DC
  // and from each other at this length, or when no harmonic from 2 up lies
  // below Nyquist.
  static absl::StatusOr<SpurAnalyzer> Create(int sample_rate, size_t length,
                                             double fundamental_hz);

  // Requires x.size() == length. Thread-safe.
  double Measure(std::span<const double> x) const;

 private:
  SpurAnalyzer() = default;

  size_t length_ = 0;
  size_t fft_size_ = 0;
  std::vector<double> window_;
  std::vector<size_t> harmonic_bins_;  // harmonics 2..10 only
  std::vector<bool> floor_mask_;       // bins used for the median
  size_t half_width_ = 0;
};

absl::StatusOr<double> SpectrumSpurs(const Signal& x, double fundamental_hz);

// Hann-windowed magnitude spectrum for display, scaled so a full-scale sine
// reads 0 dB, peak-hold decimated to at most max_points bins.
struct DisplaySpectrum {
  std::vector<double> freq_hz;
  std::vector<double> level_db;
};

DisplaySpectrum ComputeDisplaySpectrum(std::span<const double> x,
                                       int sample_rate,
                                       size_t max_points = 2048);

}  // namespace ecdither

#endif  // ECDITHER_SPECTRUM_H_

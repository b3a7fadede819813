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

#ifndef ECDITHER_PERCEPTUAL_H_
#define ECDITHER_PERCEPTUAL_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/contour.h"
#include "ecdither/signal.h"

namespace ecdither {

inline constexpr double kPwsnrCapDb = 200.0;
inline constexpr size_t kMinPwsnrLength = 1024;

// Contour-weighted spectral power of fixed-length blocks: Hann window,
// zero-padded power-of-two transform, each one-sided bin weighted by
// W(f) = 10^(gain_db(f) / 10) from the contour.
class PerceptualWeighting {
 public:
  PerceptualWeighting(const ContourTable& contour, int sample_rate,
                      size_t length);

  size_t length() const { return length_; }
  // Requires x.size() == length(). Thread-safe.
  double WeightedPower(std::span<const double> x) const;

 private:
  size_t length_;
  size_t fft_size_;
  std::vector<double> window_;
  std::vector<double> weight_;
};

// 10 log10(signal / error), clamped to [-cap, +cap]; zero error gives +cap.
double PwsnrFromPowers(double signal_power, double error_power);

// Perceptually weighted SNR proxy of x_hat against reference x, in dB. The
// error is x_hat - x and the weighting is the contour's. Requires equal
// lengths of at least kMinPwsnrLength.
absl::StatusOr<double> Pwsnr(const Signal& x, const Signal& x_hat,
                             const ContourTable& contour);

}  // namespace ecdither

#endif  // ECDITHER_PERCEPTUAL_H_

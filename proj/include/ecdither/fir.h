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

#ifndef ECDITHER_FIR_H_
#define ECDITHER_FIR_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/contour.h"

namespace ecdither {

// Linear-phase FIR with an even order, so the group delay order/2 is a whole
// number of samples.
class FirFilter {
 public:
  static absl::StatusOr<FirFilter> Create(std::vector<double> taps);

  const std::vector<double>& taps() const { return taps_; }
  int order() const { return static_cast<int>(taps_.size()) - 1; }

  // |H(e^{j 2 pi f / rate})|.
  double Magnitude(double hz, double sample_rate) const;

 private:
  explicit FirFilter(std::vector<double> taps) : taps_(std::move(taps)) {}

  std::vector<double> taps_;
};

inline constexpr int kDefaultFirOrder = 512;
inline constexpr int kFirDesignGridPoints = 1024;

// Frequency-sampling design in the manner of MATLAB fir2: the contour is
// extended to [0, Nyquist], interpolated in dB onto a uniform grid of
// kFirDesignGridPoints intervals, converted to linear gain, inverse
// transformed as a zero-phase response, centred and Hamming-windowed to
// order + 1 taps.
absl::StatusOr<FirFilter> DesignFir(const ContourTable& contour, int order,
                                    double sample_rate);

// Zero-phase application: the filter runs forward and the output is advanced
// by order/2 samples, so y[i] = sum_j taps[j] * x[i + order/2 - j] with zeros
// outside the input. Output has the input's length.
std::vector<double> FilterZeroPhase(const FirFilter& filter,
                                    std::span<const double> x);

}  // namespace ecdither

#endif  // ECDITHER_FIR_H_

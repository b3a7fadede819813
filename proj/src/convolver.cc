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

#include "ecdither/convolver.h"

#include <algorithm>

namespace ecdither {

ZeroPhaseConvolver::ZeroPhaseConvolver(const FirFilter& filter, size_t length)
    : length_(length),
      delay_(static_cast<size_t>(filter.order() / 2)),
      fft_(NextPowerOfTwo(length + filter.taps().size())) {
  std::span<double> time = fft_.time();
  std::fill(time.begin(), time.end(), 0.0);
  std::copy(filter.taps().begin(), filter.taps().end(), time.begin());
  fft_.Forward();
  kernel_.assign(fft_.freq().begin(), fft_.freq().end());
  // Fold the inverse transform's 1/N into the kernel.
  const double scale = 1.0 / static_cast<double>(fft_.size());
  for (auto& k : kernel_) k *= scale;
}

void ZeroPhaseConvolver::Apply(std::span<const double> x, std::span<double> y) {
  std::span<double> time = fft_.time();
  std::copy(x.begin(), x.end(), time.begin());
  std::fill(time.begin() + static_cast<std::ptrdiff_t>(x.size()), time.end(),
            0.0);
  fft_.Forward();
  std::span<std::complex<double>> freq = fft_.freq();
  for (size_t k = 0; k < freq.size(); ++k) freq[k] *= kernel_[k];
  fft_.Inverse();
  std::copy_n(time.begin() + static_cast<std::ptrdiff_t>(delay_), length_,
              y.begin());
}

}  // namespace ecdither

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

#ifndef ECDITHER_CONVOLVER_H_
#define ECDITHER_CONVOLVER_H_

#include <complex>
#include <span>
#include <vector>

#include "ecdither/fft.h"
#include "ecdither/fir.h"

namespace ecdither {

// FFT convolution of a fixed-length block with a FIR, advanced by the
// filter's group delay. Holds the kernel spectrum so repeated applications
// (one per shaping iteration) pay for two transforms each.
class ZeroPhaseConvolver {
 public:
  ZeroPhaseConvolver(const FirFilter& filter, size_t length);

  size_t length() const { return length_; }

  // x and y have length(); they may alias.
  void Apply(std::span<const double> x, std::span<double> y);

 private:
  size_t length_;
  size_t delay_;
  RealFft fft_;
  std::vector<std::complex<double>> kernel_;
};

}  // namespace ecdither

#endif  // ECDITHER_CONVOLVER_H_

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

#ifndef ECDITHER_FFT_H_
#define ECDITHER_FFT_H_

#include <complex>
#include <cstddef>
#include <span>

namespace ecdither {

// Real-input FFT of a fixed power-of-two size, backed by FFTW. Plans are
// shared per size across instances; each instance owns its aligned buffers,
// so one instance must not be used from two threads at once while separate
// instances may run concurrently.
class RealFft {
 public:
  explicit RealFft(size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  size_t size() const { return size_; }
  size_t bins() const { return size_ / 2 + 1; }

  // Time-domain buffer of size(); fill it, then call Forward().
  std::span<double> time() { return {time_, size_}; }
  // Frequency-domain buffer of bins().
  std::span<std::complex<double>> freq() { return {freq_, bins()}; }

  void Forward();
  // Unnormalized inverse: time() ends up size() times the original.
  void Inverse();

 private:
  size_t size_;
  double* time_;
  std::complex<double>* freq_;
  void* forward_plan_;
  void* inverse_plan_;
};

// Smallest power of two >= n (n >= 1).
size_t NextPowerOfTwo(size_t n);

}  // namespace ecdither

#endif  // ECDITHER_FFT_H_

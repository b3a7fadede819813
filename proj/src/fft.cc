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

#include "ecdither/fft.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace ecdither {
namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan inverse;
};

// FFTW's planner is not thread-safe; plan execution through the new-array
// interface is.
std::mutex& PlannerMutex() {
  static std::mutex mu;
  return mu;
}

PlanPair PlansFor(size_t size) {
  static std::map<size_t, PlanPair>* cache = new std::map<size_t, PlanPair>();
  std::lock_guard<std::mutex> lock(PlannerMutex());
  if (auto it = cache->find(size); it != cache->end()) return it->second;
  double* time = fftw_alloc_real(size);
  fftw_complex* freq = fftw_alloc_complex(size / 2 + 1);
  const int n = static_cast<int>(size);
  PlanPair plans{
      fftw_plan_dft_r2c_1d(n, time, freq, FFTW_ESTIMATE),
      fftw_plan_dft_c2r_1d(n, freq, time, FFTW_ESTIMATE | FFTW_DESTROY_INPUT)};
  fftw_free(time);
  fftw_free(freq);
  cache->emplace(size, plans);
  return plans;
}

}  // namespace

size_t NextPowerOfTwo(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

RealFft::RealFft(size_t size)
    : size_(size),
      time_(fftw_alloc_real(size)),
      freq_(reinterpret_cast<std::complex<double>*>(
          fftw_alloc_complex(size / 2 + 1))) {
  const PlanPair plans = PlansFor(size);
  forward_plan_ = plans.forward;
  inverse_plan_ = plans.inverse;
}

RealFft::~RealFft() {
  fftw_free(time_);
  fftw_free(freq_);
}

void RealFft::Forward() {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), time_,
                       reinterpret_cast<fftw_complex*>(freq_));
}

void RealFft::Inverse() {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_),
                       reinterpret_cast<fftw_complex*>(freq_), time_);
}

}  // namespace ecdither

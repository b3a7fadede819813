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

#ifndef ECDITHER_RNG_H_
#define ECDITHER_RNG_H_

#include <cstdint>
#include <random>

namespace ecdither {

// SplitMix64 finalizer over (seed, stream). Used to derive independent,
// reproducible substreams such as one per sweep alpha index.
uint64_t MixSeed(uint64_t seed, uint64_t stream);

// Seedable, splittable 64-bit generator. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; conversions to floating point are
// done here rather than through <random> distributions so results are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Canonical() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [-half_width, half_width).
  double Symmetric(double half_width) {
    return (2.0 * Canonical() - 1.0) * half_width;
  }

  Rng Split(uint64_t stream) const { return Rng(MixSeed(seed_, stream)); }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace ecdither

#endif  // ECDITHER_RNG_H_

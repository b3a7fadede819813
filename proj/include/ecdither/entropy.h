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

#ifndef ECDITHER_ENTROPY_H_
#define ECDITHER_ENTROPY_H_

#include <cstdint>
#include <span>

#include "absl/status/statusor.h"

namespace ecdither {

// Shannon entropy in bits of the empirical symbol distribution,
// H = -sum p_i log2 p_i with 0 log 0 = 0. Symbols must be < alphabet_size.
absl::StatusOr<double> Entropy(std::span<const uint32_t> symbols,
                               uint32_t alphabet_size);

// Order-1 conditional entropy H(S_i | S_{i-1}) in bits over the n - 1
// adjacent pairs; 0 for a single symbol.
absl::StatusOr<double> ConditionalEntropy(std::span<const uint32_t> symbols,
                                          uint32_t alphabet_size);

// Mean of (a[i] - b[i])^2.
absl::StatusOr<double> MeanSquaredError(std::span<const double> a,
                                        std::span<const double> b);

}  // namespace ecdither

#endif  // ECDITHER_ENTROPY_H_

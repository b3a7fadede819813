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

#include "ecdither/entropy.h"

#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ecdither {
namespace {

absl::Status CheckSymbols(std::span<const uint32_t> symbols,
                          uint32_t alphabet_size) {
  if (symbols.empty()) return absl::InvalidArgumentError("no symbols");
  if (alphabet_size == 0) return absl::InvalidArgumentError("empty alphabet");
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] >= alphabet_size) {
      return absl::InvalidArgumentError(
          absl::StrCat("symbol ", symbols[i], " at index ", i,
                       " outside alphabet of ", alphabet_size));
    }
  }
  return absl::OkStatus();
}

double EntropyOfCounts(const std::vector<uint64_t>& counts, uint64_t total) {
  double h = 0.0;
  const double n = static_cast<double>(total);
  for (uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  // -sum p log p can come out as -0.0 or a hair below zero.
  return h > 0.0 ? h : 0.0;
}

}  // namespace

absl::StatusOr<double> Entropy(std::span<const uint32_t> symbols,
                               uint32_t alphabet_size) {
  if (auto status = CheckSymbols(symbols, alphabet_size); !status.ok()) {
    return status;
  }
  std::vector<uint64_t> counts(alphabet_size, 0);
  for (uint32_t s : symbols) ++counts[s];
  return EntropyOfCounts(counts, symbols.size());
}

absl::StatusOr<double> ConditionalEntropy(std::span<const uint32_t> symbols,
                                          uint32_t alphabet_size) {
  if (auto status = CheckSymbols(symbols, alphabet_size); !status.ok()) {
    return status;
  }
  if (symbols.size() < 2) return 0.0;
  const size_t m = alphabet_size;
  std::vector<uint64_t> pairs(m * m, 0);
  std::vector<uint64_t> previous(m, 0);
  for (size_t i = 1; i < symbols.size(); ++i) {
    ++pairs[symbols[i - 1] * m + symbols[i]];
    ++previous[symbols[i - 1]];
  }
  const uint64_t total = symbols.size() - 1;
  const double h =
      EntropyOfCounts(pairs, total) - EntropyOfCounts(previous, total);
  return h > 0.0 ? h : 0.0;
}

absl::StatusOr<double> MeanSquaredError(std::span<const double> a,
                                        std::span<const double> b) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("length mismatch: ", a.size(), " vs ", b.size()));
  }
  if (a.empty()) return absl::InvalidArgumentError("empty signals");
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

}  // namespace ecdither

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

#include "ecdither/range_coder.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ecdither {
namespace {

constexpr uint32_t kTop = 1u << 24;

class AdaptiveModel {
 public:
  explicit AdaptiveModel(uint32_t alphabet_size)
      : freq_(alphabet_size, 1), total_(alphabet_size) {}

  uint32_t total() const { return total_; }
  uint32_t freq(uint32_t s) const { return freq_[s]; }

  uint32_t Cumulative(uint32_t s) const {
    uint32_t cum = 0;
    for (uint32_t i = 0; i < s; ++i) cum += freq_[i];
    return cum;
  }

  // Symbol whose cumulative interval holds `target` (< total), and the
  // interval's start.
  uint32_t Find(uint32_t target, uint32_t* cum_out) const {
    uint32_t cum = 0;
    uint32_t s = 0;
    while (cum + freq_[s] <= target) cum += freq_[s++];
    *cum_out = cum;
    return s;
  }

  void Update(uint32_t s) {
    freq_[s] += kRangeCoderIncrement;
    total_ += kRangeCoderIncrement;
    if (total_ > kRangeCoderMaxTotal) {
      total_ = 0;
      for (uint32_t& f : freq_) {
        f = (f + 1) / 2;
        total_ += f;
      }
    }
  }

 private:
  std::vector<uint32_t> freq_;
  uint32_t total_;
};

class Encoder {
 public:
  explicit Encoder(std::vector<uint8_t>* out) : out_(out) {}

  void Encode(uint32_t cum, uint32_t freq, uint32_t total) {
    const uint32_t r = range_ / total;
    low_ += static_cast<uint64_t>(r) * cum;
    range_ = r * freq;
    while (range_ < kTop) {
      range_ <<= 8;
      ShiftLow();
    }
  }

  void Flush() {
    for (int i = 0; i < 5; ++i) ShiftLow();
  }

 private:
  void ShiftLow() {
    if (static_cast<uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
      const uint8_t carry = static_cast<uint8_t>(low_ >> 32);
      uint8_t pending = cache_;
      do {
        out_->push_back(static_cast<uint8_t>(pending + carry));
        pending = 0xFF;
      } while (--cache_size_ != 0);
      cache_ = static_cast<uint8_t>(low_ >> 24);
    }
    ++cache_size_;
    low_ = (low_ & 0x00FFFFFFu) << 8;
  }

  std::vector<uint8_t>* out_;
  uint64_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint8_t cache_ = 0;
  uint64_t cache_size_ = 1;
};

absl::Status CheckAlphabet(uint32_t alphabet_size) {
  if (alphabet_size == 0 || alphabet_size > kRangeCoderMaxAlphabet) {
    return absl::InvalidArgumentError(
        absl::StrCat("range coder alphabet must be in [1, ",
                     kRangeCoderMaxAlphabet, "], got ", alphabet_size));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::vector<uint8_t>> RangeEncode(
    std::span<const uint32_t> symbols, uint32_t alphabet_size) {
  if (auto status = CheckAlphabet(alphabet_size); !status.ok()) return status;
  std::vector<uint8_t> out;
  out.reserve(symbols.size() / 2 + 16);
  Encoder encoder(&out);
  AdaptiveModel model(alphabet_size);
  for (size_t i = 0; i < symbols.size(); ++i) {
    const uint32_t s = symbols[i];
    if (s >= alphabet_size) {
      return absl::InvalidArgumentError(absl::StrCat("symbol ", s, " at index ",
                                                     i, " outside alphabet of ",
                                                     alphabet_size));
    }
    encoder.Encode(model.Cumulative(s), model.freq(s), model.total());
    model.Update(s);
  }
  encoder.Flush();
  return out;
}

absl::StatusOr<std::vector<uint32_t>> RangeDecode(
    std::span<const uint8_t> bytes, uint32_t alphabet_size, size_t count) {
  if (auto status = CheckAlphabet(alphabet_size); !status.ok()) return status;
  size_t pos = 0;
  bool overrun = false;
  auto next = [&]() -> uint32_t {
    if (pos >= bytes.size()) {
      overrun = true;
      return 0;
    }
    return bytes[pos++];
  };

  if (bytes.empty() || bytes[0] != 0) {
    return absl::DataLossError("range stream does not start with a zero byte");
  }
  uint32_t code = 0;
  uint32_t range = 0xFFFFFFFFu;
  for (int i = 0; i < 5; ++i) code = (code << 8) | next();
  if (overrun) return absl::DataLossError("range stream truncated");

  AdaptiveModel model(alphabet_size);
  std::vector<uint32_t> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const uint32_t r = range / model.total();
    const uint32_t target = code / r;
    if (target >= model.total()) {
      return absl::DataLossError(
          absl::StrCat("corrupt range stream at symbol ", i));
    }
    uint32_t cum = 0;
    const uint32_t s = model.Find(target, &cum);
    code -= r * cum;
    range = r * model.freq(s);
    while (range < kTop) {
      code = (code << 8) | next();
      range <<= 8;
    }
    if (overrun) {
      return absl::DataLossError(
          absl::StrCat("range stream truncated at symbol ", i));
    }
    out.push_back(s);
    model.Update(s);
  }
  return out;
}

absl::StatusOr<double> CodedBitsPerSymbol(std::span<const uint32_t> symbols,
                                          uint32_t alphabet_size) {
  if (symbols.empty()) return absl::InvalidArgumentError("no symbols");
  auto bytes = RangeEncode(symbols, alphabet_size);
  if (!bytes.ok()) return bytes.status();
  return 8.0 * static_cast<double>(bytes->size()) /
         static_cast<double>(symbols.size());
}

}  // namespace ecdither

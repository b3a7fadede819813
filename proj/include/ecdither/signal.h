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

#ifndef ECDITHER_SIGNAL_H_
#define ECDITHER_SIGNAL_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace ecdither {

inline constexpr int kDefaultSampleRate = 44100;

// A mono sample sequence. Amplitudes are nominally in [-A, A] for the full
// scale A of whatever quantizer consumes them; every value is finite and the
// sample rate is positive. Immutable after construction.
class Signal {
 public:
  static absl::StatusOr<Signal> Create(std::vector<double> samples,
                                       int sample_rate);

  Signal() = default;

  std::span<const double> samples() const { return samples_; }
  const std::vector<double>& vector() const { return samples_; }
  int sample_rate() const { return sample_rate_; }
  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double operator[](size_t i) const { return samples_[i]; }

  // Largest absolute sample value; 0 for an empty signal.
  double Peak() const;

 private:
  Signal(std::vector<double> samples, int sample_rate)
      : samples_(std::move(samples)), sample_rate_(sample_rate) {}

  std::vector<double> samples_;
  int sample_rate_ = kDefaultSampleRate;
};

struct ToneSpec {
  double frequency_hz = 0.0;
  double duration_s = 1.0;
  // Relative to full scale; must be <= 0.
  double level_db = 0.0;
  double phase_rad = 0.0;
};

// Tones are mixed with equal weight (their individual levels are ignored) and
// the mix is rescaled so its peak equals 10^(level_db/20).
struct ChordSpec {
  std::vector<ToneSpec> tones;
  double level_db = 0.0;
};

// samples[i] = 10^(level_db/20) * sin(2*pi*f*i/rate + phase),
// length round(duration * rate).
absl::StatusOr<Signal> GenerateSine(const ToneSpec& spec,
                                    int sample_rate = kDefaultSampleRate);

absl::StatusOr<Signal> GenerateChord(const ChordSpec& spec,
                                     int sample_rate = kDefaultSampleRate);

// Scales so that max |sample| == 1. Rejects all-zero input.
absl::StatusOr<Signal> NormalizePeak(const Signal& signal);

double DbToAmplitude(double db);

// Equal-tempered pitch with A4 = 440 Hz. Accepts names like "C4", "F#3",
// "Bb5".
absl::StatusOr<double> NoteFrequency(std::string_view note);

}  // namespace ecdither

#endif  // ECDITHER_SIGNAL_H_

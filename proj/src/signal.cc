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

#include "ecdither/signal.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string_view>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ecdither {

absl::StatusOr<Signal> Signal::Create(std::vector<double> samples,
                                      int sample_rate) {
  if (sample_rate <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample rate must be positive, got ", sample_rate));
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite sample at index ", i));
    }
  }
  return Signal(std::move(samples), sample_rate);
}

double Signal::Peak() const {
  double peak = 0.0;
  for (double s : samples_) peak = std::max(peak, std::abs(s));
  return peak;
}

double DbToAmplitude(double db) { return std::pow(10.0, db / 20.0); }

namespace {

absl::Status ValidateTone(const ToneSpec& spec, int sample_rate) {
  if (sample_rate <= 0) {
    return absl::InvalidArgumentError("sample rate must be positive");
  }
  if (!(spec.frequency_hz >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("frequency must be >= 0, got ", spec.frequency_hz));
  }
  if (spec.frequency_hz >= sample_rate / 2.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("frequency ", spec.frequency_hz,
                     " Hz is at or above Nyquist (", sample_rate / 2.0, ")"));
  }
  if (!(spec.duration_s > 0.0)) {
    return absl::InvalidArgumentError("duration must be positive");
  }
  if (!(spec.level_db <= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("level must be <= 0 dBFS, got ", spec.level_db));
  }
  if (!std::isfinite(spec.phase_rad)) {
    return absl::InvalidArgumentError("phase must be finite");
  }
  return absl::OkStatus();
}

size_t ToneLength(const ToneSpec& spec, int sample_rate) {
  return static_cast<size_t>(std::llround(spec.duration_s * sample_rate));
}

}  // namespace

absl::StatusOr<Signal> GenerateSine(const ToneSpec& spec, int sample_rate) {
  if (auto status = ValidateTone(spec, sample_rate); !status.ok()) {
    return status;
  }
  const double amplitude = DbToAmplitude(spec.level_db);
  const double omega = 2.0 * std::numbers::pi * spec.frequency_hz / sample_rate;
  std::vector<double> samples(ToneLength(spec, sample_rate));
  for (size_t i = 0; i < samples.size(); ++i) {
    samples[i] =
        amplitude * std::sin(omega * static_cast<double>(i) + spec.phase_rad);
  }
  return Signal::Create(std::move(samples), sample_rate);
}

absl::StatusOr<Signal> GenerateChord(const ChordSpec& spec, int sample_rate) {
  if (spec.tones.empty()) {
    return absl::InvalidArgumentError("chord has no tones");
  }
  if (!(spec.level_db <= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("level must be <= 0 dBFS, got ", spec.level_db));
  }
  std::vector<double> mix;
  for (const ToneSpec& tone : spec.tones) {
    ToneSpec unit = tone;
    unit.level_db = 0.0;
    auto sine = GenerateSine(unit, sample_rate);
    if (!sine.ok()) return sine.status();
    if (sine->size() > mix.size()) mix.resize(sine->size(), 0.0);
    for (size_t i = 0; i < sine->size(); ++i) mix[i] += (*sine)[i];
  }
  double peak = 0.0;
  for (double s : mix) peak = std::max(peak, std::abs(s));
  if (peak == 0.0) {
    return absl::InvalidArgumentError("chord mix is silent");
  }
  const double target = DbToAmplitude(spec.level_db);
  for (double& s : mix) s = s / peak * target;
  return Signal::Create(std::move(mix), sample_rate);
}

absl::StatusOr<Signal> NormalizePeak(const Signal& signal) {
  const double peak = signal.Peak();
  if (peak == 0.0) {
    return absl::InvalidArgumentError("cannot normalize a silent signal");
  }
  std::vector<double> out(signal.samples().begin(), signal.samples().end());
  for (double& s : out) s /= peak;
  return Signal::Create(std::move(out), signal.sample_rate());
}

absl::StatusOr<double> NoteFrequency(std::string_view note) {
  static constexpr int kSemitone[] = {9, 11, 0, 2, 4, 5, 7};  // A..G
  if (note.size() < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad note name '", std::string(note), "'"));
  }
  const char letter = static_cast<char>(std::toupper(note[0]));
  if (letter < 'A' || letter > 'G') {
    return absl::InvalidArgumentError(
        absl::StrCat("bad note name '", std::string(note), "'"));
  }
  int semitone = kSemitone[letter - 'A'];
  size_t pos = 1;
  if (note[pos] == '#') {
    ++semitone;
    ++pos;
  } else if (note[pos] == 'b') {
    --semitone;
    ++pos;
  }
  std::string_view octave_text = note.substr(pos);
  bool negative = false;
  if (!octave_text.empty() && octave_text.front() == '-') {
    negative = true;
    octave_text.remove_prefix(1);
  }
  if (octave_text.empty() || octave_text.size() > 2 ||
      !std::all_of(octave_text.begin(), octave_text.end(),
                   [](char c) { return std::isdigit(c) != 0; })) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad note name '", std::string(note), "'"));
  }
  int octave = 0;
  for (char c : octave_text) octave = octave * 10 + (c - '0');
  if (negative) octave = -octave;
  const int midi = (octave + 1) * 12 + semitone;
  return 440.0 * std::pow(2.0, (midi - 69) / 12.0);
}

}  // namespace ecdither

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

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

TEST(SignalTest, RejectsNonFiniteAndBadRate) {
  EXPECT_FALSE(Signal::Create({0.0, std::nan("")}, 44100).ok());
  EXPECT_FALSE(
      Signal::Create({std::numeric_limits<double>::infinity()}, 44100).ok());
  EXPECT_FALSE(Signal::Create({0.0}, 0).ok());
  EXPECT_TRUE(Signal::Create({}, 8000).ok());
}

TEST(SignalTest, SineMiddleC) {
  auto s = GenerateSine({.frequency_hz = 261.63});
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->size(), 44100u);
  EXPECT_NEAR(s->Peak(), 1.0, 1e-6);
  EXPECT_NEAR(44100.0 / 261.63, 168.6, 0.05);
  // Upward zero crossings are one period apart.
  std::vector<double> crossings;
  for (size_t i = 1; i < s->size(); ++i) {
    if ((*s)[i - 1] < 0.0 && (*s)[i] >= 0.0) {
      crossings.push_back(i - 1 + (*s)[i - 1] / ((*s)[i - 1] - (*s)[i]));
    }
  }
  ASSERT_GT(crossings.size(), 100u);
  const double period =
      (crossings.back() - crossings.front()) / (crossings.size() - 1);
  EXPECT_NEAR(period, 168.56, 0.01);
}

TEST(SignalTest, SineFormula) {
  auto s = GenerateSine({.frequency_hz = 1000.0,
                         .duration_s = 0.01,
                         .level_db = -6.0,
                         .phase_rad = 0.3},
                        48000);
  ASSERT_TRUE(s.ok());
  ASSERT_EQ(s->size(), 480u);
  const double amp = std::pow(10.0, -6.0 / 20.0);
  for (size_t i = 0; i < s->size(); ++i) {
    EXPECT_NEAR(
        (*s)[i],
        amp * std::sin(2.0 * std::numbers::pi * 1000.0 * i / 48000 + 0.3),
        1e-12);
  }
}

TEST(SignalTest, SineLevel) {
  auto s = GenerateSine({.frequency_hz = 441.0, .level_db = -20.0});
  ASSERT_TRUE(s.ok());
  EXPECT_NEAR(s->Peak(), 0.1, 1e-12);
}

TEST(SignalTest, ZeroFrequencyIsConstant) {
  auto zero = GenerateSine({.frequency_hz = 0.0, .duration_s = 0.01});
  ASSERT_TRUE(zero.ok());
  for (double v : zero->samples()) EXPECT_EQ(v, 0.0);
  auto phased = GenerateSine({.frequency_hz = 0.0,
                              .duration_s = 0.01,
                              .level_db = -6.0,
                              .phase_rad = 1.0});
  ASSERT_TRUE(phased.ok());
  for (double v : phased->samples()) {
    EXPECT_DOUBLE_EQ(v, DbToAmplitude(-6.0) * std::sin(1.0));
  }
}

TEST(SignalTest, SineRejectsBadSpecs) {
  EXPECT_FALSE(GenerateSine({.frequency_hz = 22050.0}).ok());
  EXPECT_FALSE(GenerateSine({.frequency_hz = 30000.0}).ok());
  EXPECT_FALSE(GenerateSine({.frequency_hz = 440.0, .level_db = 0.5}).ok());
  EXPECT_FALSE(GenerateSine({.frequency_hz = 440.0, .duration_s = 0.0}).ok());
  EXPECT_FALSE(GenerateSine({.frequency_hz = -1.0}).ok());
}

TEST(SignalTest, SineRmsProperty) {
  testing::Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    // Integer number of periods: f = k * rate / n.
    const int n = gen.Int(200, 4000);
    const int k = gen.Int(1, n / 2 - 1);
    const int rate = 44100;
    const double f = static_cast<double>(k) * rate / n;
    const double level = gen.Uniform(-30.0, 0.0);
    auto s = GenerateSine({.frequency_hz = f,
                           .duration_s = static_cast<double>(n) / rate,
                           .level_db = level,
                           .phase_rad = gen.Uniform(0, 6.28)},
                          rate);
    ASSERT_TRUE(s.ok());
    ASSERT_EQ(s->size(), static_cast<size_t>(n));
    double sum = 0.0;
    for (double v : s->samples()) sum += v * v;
    const double rms = std::sqrt(sum / n);
    const double expected = DbToAmplitude(level) / std::sqrt(2.0);
    EXPECT_NEAR(rms, expected, 0.01 * expected) << "f=" << f << " n=" << n;
  }
}

TEST(SignalTest, SingleToneChordMatchesSine) {
  const ToneSpec tone{.frequency_hz = 261.63};
  auto chord = GenerateChord({.tones = {tone}, .level_db = 0.0});
  auto sine = GenerateSine(tone);
  ASSERT_TRUE(chord.ok());
  ASSERT_TRUE(sine.ok());
  ASSERT_EQ(chord->size(), sine->size());
  // The chord is rescaled to an exact peak; the sampled sine peaks a hair
  // under 1.
  for (size_t i = 0; i < sine->size(); ++i) {
    EXPECT_NEAR((*chord)[i], (*sine)[i], 1e-6);
  }
}

TEST(SignalTest, DoubledToneChord) {
  const ToneSpec c4{.frequency_hz = 261.63};
  auto chord = GenerateChord({.tones = {c4, c4}, .level_db = -10.0});
  auto sine = GenerateSine(c4);
  ASSERT_TRUE(chord.ok());
  EXPECT_NEAR(chord->Peak(), std::pow(10.0, -0.5), 1e-12);
  const double scale = std::pow(10.0, -0.5) / sine->Peak();
  for (size_t i = 0; i < sine->size(); ++i) {
    EXPECT_NEAR((*chord)[i], (*sine)[i] * scale, 1e-12);
  }
}

TEST(SignalTest, MajorTriadPeak) {
  ChordSpec spec{.level_db = -10.0};
  for (const char* note : {"C4", "E4", "G4", "C5"}) {
    auto f = NoteFrequency(note);
    ASSERT_TRUE(f.ok());
    spec.tones.push_back({.frequency_hz = *f});
  }
  auto chord = GenerateChord(spec);
  ASSERT_TRUE(chord.ok());
  // Independent oracle: direct max scan of the raw mix.
  std::vector<double> mix(chord->size(), 0.0);
  for (const ToneSpec& t : spec.tones) {
    for (size_t i = 0; i < mix.size(); ++i) {
      mix[i] += std::sin(2.0 * std::numbers::pi * t.frequency_hz * i / 44100.0);
    }
  }
  double peak = 0.0;
  for (double v : mix) peak = std::max(peak, std::abs(v));
  EXPECT_NEAR(chord->Peak(), 0.3162, 1e-4);
  EXPECT_NEAR(chord->Peak(), std::pow(10.0, -0.5), 1e-9);
  for (size_t i = 0; i < mix.size(); i += 97) {
    EXPECT_NEAR((*chord)[i], mix[i] / peak * std::pow(10.0, -0.5), 1e-12);
  }
}

TEST(SignalTest, EmptyChordFails) { EXPECT_FALSE(GenerateChord({}).ok()); }

TEST(SignalTest, NormalizePeak) {
  auto half = Signal::Create({0.5, -0.25, 0.1}, 44100);
  auto n = NormalizePeak(*half);
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(n->vector(), (std::vector<double>{1.0, -0.5, 0.2}));

  auto unit = Signal::Create({1.0, -0.3}, 44100);
  EXPECT_EQ(NormalizePeak(*unit)->vector(), unit->vector());

  auto quiet = GenerateSine({.frequency_hz = 261.63, .level_db = -25.0});
  EXPECT_NEAR(NormalizePeak(*quiet)->Peak(), 1.0, 1e-12);

  auto silent = Signal::Create({0.0, 0.0}, 44100);
  EXPECT_FALSE(NormalizePeak(*silent).ok());
}

TEST(SignalTest, NormalizeIsIdempotent) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = Signal::Create(gen.Doubles(gen.Int(1, 300), -3.0, 3.0), 44100);
    auto once = NormalizePeak(*s);
    ASSERT_TRUE(once.ok());
    auto twice = NormalizePeak(*once);
    ASSERT_TRUE(twice.ok());
    EXPECT_EQ(once->Peak(), 1.0);
    for (size_t i = 0; i < once->size(); ++i) {
      EXPECT_NEAR((*once)[i], (*twice)[i], 1e-15);
    }
  }
}

TEST(SignalTest, NoteNames) {
  EXPECT_DOUBLE_EQ(*NoteFrequency("A4"), 440.0);
  EXPECT_NEAR(*NoteFrequency("C4"), 261.63, 0.01);
  EXPECT_NEAR(*NoteFrequency("C5"), 523.25, 0.01);
  EXPECT_NEAR(*NoteFrequency("F#3"), *NoteFrequency("Gb3"), 1e-12);
  EXPECT_NEAR(*NoteFrequency("Bb5") / *NoteFrequency("A5"),
              std::pow(2.0, 1.0 / 12.0), 1e-12);
  EXPECT_FALSE(NoteFrequency("H4").ok());
  EXPECT_FALSE(NoteFrequency("C").ok());
  EXPECT_FALSE(NoteFrequency("").ok());
}

}  // namespace
}  // namespace ecdither

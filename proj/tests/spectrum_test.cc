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

#include "ecdither/spectrum.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ecdither/pipeline.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

TEST(SpurTest, PureSineHasNoSpurs) {
  Signal x = testing::C4Fixture();
  auto spur = SpectrumSpurs(x, 261.63);
  ASSERT_TRUE(spur.ok()) << spur.status();
  EXPECT_LE(*spur, 3.0);
}

TEST(SpurTest, UnditheredQuantizationShowsHarmonics) {
  Signal x = testing::C4Fixture();
  auto q = RunPipeline(x, {}, {}, DitherMode::kNonSubtractive);
  const double undithered = *SpectrumSpurs(q->output, 261.63);
  EXPECT_GE(undithered, 20.0);
  auto d =
      RunPipeline(x, {.kind = DitherKind::kTriangular, .alpha = 1.0, .seed = 1},
                  {}, DitherMode::kNonSubtractive);
  const double dithered = *SpectrumSpurs(d->output, 261.63);
  EXPECT_GE(undithered - dithered, 10.0);
}

TEST(SpurTest, InjectedHarmonicLevel) {
  // Third harmonic at -60 dB over white noise: the reading grows with the
  // harmonic and stays far below it with the harmonic removed.
  testing::Gen gen(5);
  const size_t n = 44100;
  std::vector<double> base(n), with(n);
  for (size_t i = 0; i < n; ++i) {
    const double t = 2 * M_PI * 500.0 * i / 44100;
    base[i] = 0.5 * std::sin(t) + 1e-4 * gen.Uniform(-1, 1);
    with[i] = base[i] + 0.5e-3 * std::sin(3 * t);
  }
  const double clean = *SpectrumSpurs(*Signal::Create(base, 44100), 500);
  const double spurred = *SpectrumSpurs(*Signal::Create(with, 44100), 500);
  EXPECT_LT(clean, 15.0);
  EXPECT_GT(spurred, clean + 20.0);
}

TEST(SpurTest, ResolutionErrors) {
  Signal x = testing::C4Fixture(0.0, 0.01);
  EXPECT_FALSE(SpectrumSpurs(x, 261.63).ok());
  EXPECT_FALSE(SpectrumSpurs(testing::C4Fixture(), 0.0).ok());
  EXPECT_FALSE(SpectrumSpurs(testing::C4Fixture(), 20000.0).ok());
}

TEST(DisplaySpectrumTest, FullScaleSineReadsZeroDb) {
  auto x = GenerateSine({.frequency_hz = 1000.0});
  DisplaySpectrum s = ComputeDisplaySpectrum(x->samples(), 44100);
  ASSERT_LE(s.freq_hz.size(), 2048u);
  ASSERT_EQ(s.freq_hz.size(), s.level_db.size());
  auto peak = std::max_element(s.level_db.begin(), s.level_db.end());
  EXPECT_NEAR(*peak, 0.0, 0.5);
  EXPECT_NEAR(s.freq_hz[peak - s.level_db.begin()], 1000.0, 15.0);
  EXPECT_TRUE(std::is_sorted(s.freq_hz.begin(), s.freq_hz.end()));
  EXPECT_TRUE(ComputeDisplaySpectrum({}, 44100).freq_hz.empty());
}

}  // namespace
}  // namespace ecdither

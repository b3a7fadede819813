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

#include "ecdither/perceptual.h"

#include <cmath>
#include <vector>

#include "ecdither/pipeline.h"
#include "ecdither/shaper.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

TEST(PwsnrTest, IdenticalIsCapped) {
  Signal x = testing::C4Fixture(0.0, 0.1);
  EXPECT_EQ(*Pwsnr(x, x, DefaultContour()), kPwsnrCapDb);
}

TEST(PwsnrTest, Validates) {
  Signal x = testing::C4Fixture(0.0, 0.1);
  Signal shorter = testing::C4Fixture(0.0, 0.05);
  EXPECT_FALSE(Pwsnr(x, shorter, DefaultContour()).ok());
  auto tiny = Signal::Create(std::vector<double>(1000, 0.1), 44100);
  EXPECT_FALSE(Pwsnr(*tiny, *tiny, DefaultContour()).ok());
}

TEST(PwsnrTest, WhiteErrorAtMinusTwentyDb) {
  // Signal and error are both white, so the flat weighting reduces to a
  // plain power ratio.
  testing::Gen gen(13);
  const size_t n = 1 << 16;
  std::vector<double> x = gen.Doubles(n, -1, 1);
  std::vector<double> y(n);
  for (size_t i = 0; i < n; ++i) y[i] = x[i] + 0.1 * gen.Uniform(-1, 1);
  auto sx = Signal::Create(x, 44100);
  auto sy = Signal::Create(y, 44100);
  const double db = *Pwsnr(*sx, *sy, ContourTable::Flat(0));
  EXPECT_NEAR(db, 20.0, 0.5);
  // Flat gain cancels.
  EXPECT_NEAR(*Pwsnr(*sx, *sy, ContourTable::Flat(-30)), db, 1e-9);
}

TEST(PwsnrTest, TimeDomainOracle) {
  // With a flat contour the weighted power is Parseval's sum of the
  // windowed block.
  testing::Gen gen(14);
  const size_t n = 3000;
  std::vector<double> x = gen.Doubles(n, -1, 1);
  PerceptualWeighting w(ContourTable::Flat(0), 44100, n);
  const size_t fft = 4096;
  double want = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double win = 0.5 - 0.5 * std::cos(2 * M_PI * i / (n - 1));
    want += x[i] * win * x[i] * win;
  }
  EXPECT_NEAR(w.WeightedPower(x), want * fft, 1e-9 * want * fft);
}

TEST(PwsnrTest, WeightingFollowsContour) {
  // The same error placed where the contour is 30 dB lower reads ~30 dB
  // better.
  auto contour = ContourTable::Create({{0, 0}, {1000, 0}, {5000, -30}});
  Signal x = *GenerateSine({.frequency_hz = 2000.0, .duration_s = 0.5});
  auto with_error = [&](double hz) {
    std::vector<double> y = x.vector();
    for (size_t i = 0; i < y.size(); ++i) {
      y[i] += 0.01 * std::sin(2 * M_PI * hz * i / 44100);
    }
    return *Pwsnr(x, *Signal::Create(y, 44100), *contour);
  };
  EXPECT_NEAR(with_error(8000) - with_error(500), 30.0, 0.5);
}

TEST(PwsnrTest, ShapedBeatsUnshaped) {
  Signal x = testing::C4Fixture();
  const DitherSpec d{.kind = DitherKind::kTriangular, .alpha = 0.5, .seed = 2};
  auto plain = RunPipeline(x, d, {}, DitherMode::kSubtractive);
  auto shaped = Shape(x, d, {}, ShapingConfig{}, DitherMode::kSubtractive);
  ASSERT_TRUE(shaped.ok());
  EXPECT_GE(*Pwsnr(x, shaped->output, DefaultContour()),
            *Pwsnr(x, plain->output, DefaultContour()));
}

TEST(PwsnrTest, FromPowers) {
  EXPECT_EQ(PwsnrFromPowers(1.0, 0.0), 200.0);
  EXPECT_EQ(PwsnrFromPowers(0.0, 1.0), -200.0);
  EXPECT_DOUBLE_EQ(PwsnrFromPowers(100.0, 1.0), 20.0);
  EXPECT_EQ(PwsnrFromPowers(1.0, 1e-300), 200.0);
}

}  // namespace
}  // namespace ecdither

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

#include "ecdither/pipeline.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

TEST(PipelineTest, NoDitherIsPlainQuantization) {
  Signal x = testing::C4Fixture();
  QuantConfig q;
  auto plain = Quantize(x.samples(), q);
  for (DitherMode mode :
       {DitherMode::kNonSubtractive, DitherMode::kSubtractive}) {
    auto r = RunPipeline(x, {.kind = DitherKind::kNone, .alpha = 0.8}, q, mode);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->output.vector(), plain->reconstruction);
    EXPECT_EQ(r->symbols, plain->symbols);
  }
}

TEST(PipelineTest, ResultInvariants) {
  Signal x = testing::C4Fixture(-3.0, 0.2);
  QuantConfig q;
  for (DitherMode mode :
       {DitherMode::kNonSubtractive, DitherMode::kSubtractive}) {
    auto r = RunPipeline(
        x, {.kind = DitherKind::kTriangular, .alpha = 0.7, .seed = 3}, q, mode);
    ASSERT_TRUE(r.ok());
    ASSERT_EQ(r->dither.size(), x.size());
    ASSERT_EQ(r->pre_quant.size(), x.size());
    ASSERT_EQ(r->symbols.size(), x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      EXPECT_EQ(r->pre_quant[i], x[i] + r->dither[i]);
      const double level = q.Level(r->symbols[i]);
      EXPECT_EQ(r->output[i], mode == DitherMode::kSubtractive
                                  ? level - r->dither[i]
                                  : level);
    }
  }
}

TEST(PipelineTest, Deterministic) {
  Signal x = testing::C4Fixture(0.0, 0.1);
  const DitherSpec d{
      .kind = DitherKind::kModifiedTriangular, .alpha = 0.3, .seed = 77};
  auto a = RunPipeline(x, d, {}, DitherMode::kSubtractive);
  auto b = RunPipeline(x, d, {}, DitherMode::kSubtractive);
  EXPECT_EQ(a->output.vector(), b->output.vector());
  EXPECT_EQ(a->symbols, b->symbols);
}

// Brute force over a dense amplitude grid: SD error stays within step/2
// whenever x + v does not clip.
TEST(PipelineTest, SubtractiveBound) {
  std::vector<double> grid;
  for (int i = 0; i <= 20000; ++i) grid.push_back(-1.0 + 2.0 * i / 20000);
  auto x = Signal::Create(grid, 44100);
  QuantConfig q;
  testing::Gen gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    for (DitherKind k : {DitherKind::kRectangular, DitherKind::kTriangular}) {
      auto r = RunPipeline(
          *x, {.kind = k, .alpha = gen.Uniform(0, 1), .seed = gen.Next()}, q,
          DitherMode::kSubtractive);
      ASSERT_TRUE(r.ok());
      for (size_t i = 0; i < grid.size(); ++i) {
        if (r->pre_quant[i] < -1.0 || r->pre_quant[i] >= 1.0) continue;
        ASSERT_LE(std::abs(r->output[i] - grid[i]), 0.125 + 1e-12);
      }
    }
  }
}

TEST(PipelineTest, NonSubtractiveBound) {
  std::vector<double> grid;
  for (int i = 0; i <= 20000; ++i) grid.push_back(-0.75 + 1.5 * i / 20000);
  auto x = Signal::Create(grid, 44100);
  auto r = RunPipeline(
      *x, {.kind = DitherKind::kTriangular, .alpha = 1.0, .seed = 5}, {},
      DitherMode::kNonSubtractive);
  ASSERT_TRUE(r.ok());
  for (size_t i = 0; i < grid.size(); ++i) {
    ASSERT_LE(std::abs(r->output[i] - grid[i]), 0.375 + 1e-12);
  }
}

TEST(PipelineTest, RampDecorrelation) {
  const size_t n = 100000;
  Signal ramp = testing::Ramp(n, -1.0, 1.0);
  auto r = RunPipeline(ramp, {.kind = DitherKind::kRectangular, .seed = 31}, {},
                       DitherMode::kSubtractive);
  ASSERT_TRUE(r.ok());
  // Statistics over the no-overload region, where no dither value can push
  // the sample past a rail. Selecting on x + v instead would bias the error
  // in the end cells.
  std::vector<double> error, ref;
  for (size_t i = 0; i < n; ++i) {
    if (ramp[i] < -1.0 + 0.125 || ramp[i] >= 1.0 - 0.125) continue;
    error.push_back(r->output[i] - ramp[i]);
    ref.push_back(ramp[i]);
  }
  EXPECT_GT(error.size(), n * 85 / 100);
  EXPECT_LT(
      testing::KsDistance(
          error,
          [](double e) { return std::clamp((e + 0.125) / 0.25, 0.0, 1.0); }),
      0.02);
  EXPECT_LT(std::abs(testing::Pearson(error, ref)), 0.05);
}

TEST(PipelineTest, RejectsMismatchedDither) {
  std::vector<double> x(10, 0.0);
  EXPECT_FALSE(RunPipelineWithDither(x, 44100, std::vector<double>(9, 0.0), {},
                                     DitherMode::kSubtractive)
                   .ok());
}

}  // namespace
}  // namespace ecdither

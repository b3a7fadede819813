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

#include "ecdither/process.h"

#include <cmath>

#include "ecdither/quantizer.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

TEST(ProcessTest, NpdfIsPlainQuantization) {
  Signal x = testing::C4Fixture(-6.0, 0.1);
  ProcessParams p;
  p.normalize = false;
  auto out = ProcessSignal(x, p);
  ASSERT_TRUE(out.ok()) << out.status();
  auto q = Quantize(x.samples(), p.quant);
  ASSERT_TRUE(q.ok());
  EXPECT_EQ(out->result.symbols, q->symbols);
  for (size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(out->result.output[i], q->reconstruction[i]);
  }
  EXPECT_LE(out->metrics.entropy_bits, 3.0);
}

TEST(ProcessTest, SubtractiveTpdfBound) {
  ProcessParams p;
  p.dither = {.kind = DitherKind::kTriangular, .alpha = 1.0, .seed = 4};
  auto out = ProcessSignal(testing::C4Fixture(), p);
  ASSERT_TRUE(out.ok());
  EXPECT_LE(out->max_abs_error_unclipped, 0.125 + 1e-12);
  EXPECT_LE(out->metrics.mse, 0.015625);
}

TEST(ProcessTest, NormalizesByDefault) {
  auto out = ProcessSignal(testing::C4Fixture(-20.0, 0.1), ProcessParams());
  ASSERT_TRUE(out.ok());
  EXPECT_NEAR(out->input.Peak(), 1.0, 1e-12);

  ProcessParams raw;
  raw.normalize = false;
  auto kept = ProcessSignal(testing::C4Fixture(-20.0, 0.1), raw);
  EXPECT_NEAR(kept->input.Peak(), std::pow(10.0, -1.0), 1e-3);
}

TEST(ProcessTest, ShapedRunsAndDivergenceAborts) {
  ProcessParams p;
  p.dither = {.kind = DitherKind::kTriangular, .alpha = 0.5, .seed = 1};
  p.shaping = ShapingConfig{.iterations = 5};
  EXPECT_TRUE(ProcessSignal(testing::C4Fixture(0.0, 0.1), p).ok());

  p.shaping->contour = ContourTable::Flat(40.0);
  p.shaping->relaxation = 1.0;
  auto bad = ProcessSignal(testing::C4Fixture(0.0, 0.1), p);
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.status().code(), absl::StatusCode::kAborted);
}

TEST(ProcessTest, Deterministic) {
  ProcessParams p;
  p.dither = {.kind = DitherKind::kModifiedTriangular, .alpha = 0.5, .seed = 3};
  auto a = ProcessSignal(testing::C4Fixture(0.0, 0.1), p);
  auto b = ProcessSignal(testing::C4Fixture(0.0, 0.1), p);
  EXPECT_EQ(a->result.symbols, b->result.symbols);
  EXPECT_EQ(a->metrics.pwsnr_db, b->metrics.pwsnr_db);
}

}  // namespace
}  // namespace ecdither

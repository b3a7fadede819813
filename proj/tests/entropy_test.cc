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
#include <map>
#include <vector>

#include "ecdither/quantizer.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

TEST(EntropyTest, Examples) {
  EXPECT_EQ(*Entropy(std::vector<uint32_t>(100, 3), 8), 0.0);
  std::vector<uint32_t> uniform;
  for (uint32_t i = 0; i < 800; ++i) uniform.push_back(i % 8);
  EXPECT_DOUBLE_EQ(*Entropy(uniform, 8), 3.0);
  EXPECT_DOUBLE_EQ(*Entropy(std::vector<uint32_t>{0, 0, 1, 2}, 3), 1.5);
}

TEST(EntropyTest, Errors) {
  EXPECT_FALSE(Entropy({}, 8).ok());
  EXPECT_FALSE(Entropy(std::vector<uint32_t>{8}, 8).ok());
  EXPECT_FALSE(ConditionalEntropy({}, 8).ok());
  EXPECT_FALSE(
      MeanSquaredError(std::vector<double>{1}, std::vector<double>{1, 2}).ok());
  EXPECT_FALSE(MeanSquaredError({}, {}).ok());
}

TEST(EntropyTest, BoundsProperty) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const uint32_t m = gen.Int(1, 64);
    std::vector<uint32_t> s(gen.Int(1, 2000));
    const int skew = gen.Int(1, 4);
    for (uint32_t& v : s) {
      uint64_t r = gen.Next() % m;
      for (int k = 1; k < skew; ++k) r = std::min<uint64_t>(r, gen.Next() % m);
      v = static_cast<uint32_t>(r);
    }
    const double h = *Entropy(s, m);
    const double h1 = *ConditionalEntropy(s, m);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log2(static_cast<double>(m)) + 1e-12);
    EXPECT_GE(h1, 0.0);
    // Conditioning does not raise entropy beyond the order-0 value of the
    // predicted symbols.
    const double h_tail =
        *Entropy(std::span(s).subspan(s.size() > 1 ? 1 : 0), m);
    if (s.size() > 1) EXPECT_LE(h1, h_tail + 1e-9);
  }
}

TEST(EntropyTest, ConditionalOnDeterministicChain) {
  std::vector<uint32_t> s;
  for (int i = 0; i < 1000; ++i) s.push_back(i % 4);
  EXPECT_NEAR(*ConditionalEntropy(s, 4), 0.0, 1e-12);
  EXPECT_NEAR(*Entropy(s, 4), 2.0, 1e-12);
  EXPECT_EQ(*ConditionalEntropy(std::vector<uint32_t>{2}, 4), 0.0);
}

TEST(EntropyTest, ConditionalOracle) {
  // Oracle from explicit conditional distributions.
  testing::Gen gen(2);
  std::vector<uint32_t> s(5000);
  for (uint32_t& v : s) v = gen.Int(0, 5);
  std::map<uint32_t, std::map<uint32_t, double>> pairs;
  std::map<uint32_t, double> prev;
  for (size_t i = 1; i < s.size(); ++i) {
    pairs[s[i - 1]][s[i]] += 1;
    prev[s[i - 1]] += 1;
  }
  double h = 0.0;
  const double n = s.size() - 1;
  for (auto& [a, row] : pairs) {
    for (auto& [b, c] : row) h -= c / n * std::log2(c / prev[a]);
  }
  EXPECT_NEAR(*ConditionalEntropy(s, 6), h, 1e-10);
}

TEST(EntropyTest, Mse) {
  EXPECT_EQ(
      *MeanSquaredError(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
      0.0);
  EXPECT_EQ(
      *MeanSquaredError(std::vector<double>{1, 0}, std::vector<double>{0, 0}),
      0.5);
  testing::Gen gen(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = gen.Doubles(gen.Int(1, 100), -2, 2);
    auto b = gen.Doubles(a.size(), -2, 2);
    EXPECT_EQ(*MeanSquaredError(a, b), *MeanSquaredError(b, a));
    EXPECT_GE(*MeanSquaredError(a, b), 0.0);
  }
}

TEST(EntropyTest, UnditheredSineMse) {
  Signal x = testing::C4Fixture();
  auto q = Quantize(x.samples(), {});
  const double mse = *MeanSquaredError(x.samples(), q->reconstruction);
  // Oracle: integrate the quantization error over one continuous period.
  QuantConfig cfg;
  const int steps = 1000000;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double s = std::sin(2.0 * M_PI * (i + 0.5) / steps);
    const double e = cfg.Level(cfg.Index(s)) - s;
    acc += e * e;
  }
  const double integral = acc / steps;
  EXPECT_LE(mse, 0.25 * 0.25 / 4);
  EXPECT_NEAR(mse, 0.25 * 0.25 / 12, 0.2 * 0.25 * 0.25 / 12);
  EXPECT_NEAR(mse, integral, 0.02 * integral);
}

}  // namespace
}  // namespace ecdither

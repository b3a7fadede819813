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

#include "ecdither/json_config.h"

#include <string>

#include "gtest/gtest.h"

namespace ecdither {
namespace {

TEST(JsonConfigTest, SweepDefaultsRoundTrip) {
  const SweepConfig in;
  auto out = SweepConfigFromJson(SweepConfigToJson(in));
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(SweepConfigToJson(*out), SweepConfigToJson(in));
}

TEST(JsonConfigTest, SweepFieldsParsed) {
  const Json j = Json::parse(R"({
    "config_version": 1,
    "alpha_count": 11,
    "shaped_alpha_count": 5,
    "conditions": ["rpdf", "tpdf_shaping"],
    "bits": 4,
    "mode": "nsd",
    "lambda": 0.25,
    "seed": 18446744073709551615,
    "rule": "argmax_j",
    "knee_threshold": 0.9,
    "fundamental_hz": 440,
    "tpdf_construction": "independent_sum",
    "shaping": {"contour": [[100, -10], [1000, 0]], "order": 64,
                "iterations": 7, "redraw_dither": true, "relaxation": 0.5}
  })");
  auto c = SweepConfigFromJson(j);
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_EQ(c->alpha_count, 11);
  EXPECT_EQ(c->shaped_alpha_count, 5);
  EXPECT_EQ(c->conditions, (std::vector<Condition>{Condition::kRpdf,
                                                   Condition::kTpdfShaping}));
  EXPECT_EQ(c->quant.bits(), 4);
  EXPECT_EQ(c->mode, DitherMode::kNonSubtractive);
  EXPECT_EQ(c->lambda, 0.25);
  EXPECT_EQ(c->seed, 18446744073709551615ull);
  EXPECT_EQ(c->rule, SelectionRule::kArgmaxObjective);
  EXPECT_EQ(c->knee_threshold, 0.9);
  EXPECT_EQ(c->fundamental_hz, 440.0);
  EXPECT_EQ(c->construction, TpdfConstruction::kIndependentSum);
  EXPECT_EQ(c->shaping.order, 64);
  EXPECT_EQ(c->shaping.iterations, 7);
  EXPECT_TRUE(c->shaping.redraw_dither);
  EXPECT_EQ(c->shaping.relaxation, 0.5);
  ASSERT_EQ(c->shaping.contour.points().size(), 2u);
  EXPECT_EQ(c->shaping.contour.points()[1].hz, 1000.0);
}

TEST(JsonConfigTest, ReportsEveryProblem) {
  const Json j = Json::parse(R"({
    "alpha_count": 2, "colour": 1, "bits": 40, "mode": "maybe",
    "shaping": {"order": 3, "extra": true}
  })");
  auto c = SweepConfigFromJson(j);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.status().code(), absl::StatusCode::kInvalidArgument);
  const std::string msg(c.status().message());
  for (const char* part :
       {"alpha_count", "unknown key 'colour'", "bits", "mode", "shaping.order",
        "unknown key 'shaping.extra'"}) {
    EXPECT_NE(msg.find(part), std::string::npos) << part << " in " << msg;
  }
}

TEST(JsonConfigTest, RejectsOtherVersion) {
  auto c = SweepConfigFromJson(Json{{"config_version", 2}});
  ASSERT_FALSE(c.ok());
  EXPECT_NE(c.status().message().find("config_version"), std::string::npos);
}

TEST(JsonConfigTest, RejectsWrongTypes) {
  EXPECT_FALSE(SweepConfigFromJson(Json{{"alpha_count", "ten"}}).ok());
  EXPECT_FALSE(SweepConfigFromJson(Json{{"seed", -1}}).ok());
  EXPECT_FALSE(SweepConfigFromJson(Json{{"conditions", Json::array()}}).ok());
  EXPECT_FALSE(SweepConfigFromJson(Json::array()).ok());
}

TEST(JsonConfigTest, ContourForms) {
  EXPECT_EQ(*ContourFromJson("default"), DefaultContour());
  EXPECT_EQ(ContourToJson(DefaultContour()), Json("default"));
  EXPECT_FALSE(ContourFromJson("/etc/passwd").ok());
  EXPECT_FALSE(ContourFromJson(Json::parse("[[100]]")).ok());
  const ContourTable flat = ContourTable::Flat(-3.0);
  EXPECT_EQ(*ContourFromJson(ContourToJson(flat)), flat);
}

TEST(JsonConfigTest, ProcessParamsRoundTrip) {
  ProcessParams p;
  p.dither = {.kind = DitherKind::kModifiedTriangular, .alpha = 0.3, .seed = 8};
  p.mode = DitherMode::kNonSubtractive;
  p.shaping = ShapingConfig{.iterations = 4};
  p.fundamental_hz = 261.63;
  p.normalize = false;
  auto q = ProcessParamsFromJson(ProcessParamsToJson(p));
  ASSERT_TRUE(q.ok()) << q.status();
  EXPECT_EQ(ProcessParamsToJson(*q), ProcessParamsToJson(p));
  EXPECT_EQ(q->shaping->iterations, 4);
  EXPECT_FALSE(q->normalize);
}

TEST(JsonConfigTest, ProcessParamsDefaults) {
  auto p = ProcessParamsFromJson(Json::object());
  ASSERT_TRUE(p.ok());
  EXPECT_FALSE(p->shaping.has_value());
  EXPECT_TRUE(p->normalize);
  auto shaped = ProcessParamsFromJson(Json{{"shaping", "default"}});
  ASSERT_TRUE(shaped.ok());
  EXPECT_TRUE(shaped->shaping.has_value());
}

TEST(JsonConfigTest, ProcessParamsRejects) {
  auto p = ProcessParamsFromJson(
      Json{{"alpha", 1.5}, {"dither", "pink"}, {"surprise", 0}});
  ASSERT_FALSE(p.ok());
  const std::string msg(p.status().message());
  EXPECT_NE(msg.find("alpha"), std::string::npos);
  EXPECT_NE(msg.find("dither"), std::string::npos);
  EXPECT_NE(msg.find("surprise"), std::string::npos);
}

TEST(JsonConfigTest, MetricRowNanSpurIsNull) {
  MetricRow r;
  r.spur_db = std::nan("");
  EXPECT_TRUE(MetricRowToJson(r)["spur_db"].is_null());
  r.spur_db = 3.5;
  EXPECT_EQ(MetricRowToJson(r)["spur_db"], 3.5);
}

}  // namespace
}  // namespace ecdither

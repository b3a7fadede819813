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

#include <cmath>
#include <limits>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace ecdither {
namespace {

std::string Key(std::string_view path, std::string_view key) {
  return path.empty() ? std::string(key)
                      : absl::StrCat(std::string(path), ".", std::string(key));
}

// Each getter leaves *out untouched when the key is absent and records an
// error when it is present with the wrong type or range.
void GetDouble(const Json& j, std::string_view path, std::string_view key,
               double lo, double hi, double* out, JsonErrors* errors) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number() || !std::isfinite(it->get<double>())) {
    errors->Add(absl::StrCat(Key(path, key), ": expected a finite number"));
    return;
  }
  const double v = it->get<double>();
  if (v < lo || v > hi) {
    errors->Add(
        absl::StrCat(Key(path, key), ": ", v, " outside [", lo, ", ", hi, "]"));
    return;
  }
  *out = v;
}

void GetInt(const Json& j, std::string_view path, std::string_view key, int lo,
            int hi, int* out, JsonErrors* errors) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number_integer()) {
    errors->Add(absl::StrCat(Key(path, key), ": expected an integer"));
    return;
  }
  const int64_t v = it->get<int64_t>();
  if (v < lo || v > hi) {
    errors->Add(
        absl::StrCat(Key(path, key), ": ", v, " outside [", lo, ", ", hi, "]"));
    return;
  }
  *out = static_cast<int>(v);
}

void GetBool(const Json& j, std::string_view path, std::string_view key,
             bool* out, JsonErrors* errors) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_boolean()) {
    errors->Add(absl::StrCat(Key(path, key), ": expected true or false"));
    return;
  }
  *out = it->get<bool>();
}

void GetSeed(const Json& j, std::string_view path, uint64_t* out,
             JsonErrors* errors) {
  auto it = j.find("seed");
  if (it == j.end()) return;
  if (it->is_number_unsigned() ||
      (it->is_number_integer() && it->get<int64_t>() >= 0)) {
    *out = it->get<uint64_t>();
    return;
  }
  errors->Add(
      absl::StrCat(Key(path, "seed"), ": expected a non-negative integer"));
}

template <typename T, typename Parser>
void GetEnum(const Json& j, std::string_view path, std::string_view key,
             Parser parse, T* out, JsonErrors* errors) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_string()) {
    errors->Add(absl::StrCat(Key(path, key), ": expected a string"));
    return;
  }
  auto v = parse(it->get<std::string>());
  if (!v.ok()) {
    errors->Add(absl::StrCat(Key(path, key), ": ", v.status().message()));
    return;
  }
  *out = *v;
}

void GetOptionalFundamental(const Json& j, std::string_view path,
                            std::optional<double>* out, JsonErrors* errors) {
  auto it = j.find("fundamental_hz");
  if (it == j.end()) return;
  if (it->is_null()) {
    out->reset();
    return;
  }
  double v = 0.0;
  GetDouble(j, path, "fundamental_hz", std::numeric_limits<double>::min(),
            std::numeric_limits<double>::max(), &v, errors);
  if (v > 0.0) *out = v;
}

void GetQuant(const Json& j, std::string_view path, QuantConfig* out,
              JsonErrors* errors) {
  int bits = out->bits();
  double full_scale = out->full_scale();
  GetInt(j, path, "bits", 1, QuantConfig::kMaxBits, &bits, errors);
  GetDouble(j, path, "full_scale", std::numeric_limits<double>::min(),
            std::numeric_limits<double>::max(), &full_scale, errors);
  auto q = QuantConfig::Create(bits, full_scale);
  if (q.ok()) *out = *q;
}

void CheckVersion(const Json& j, std::string_view path, JsonErrors* errors) {
  auto it = j.find("config_version");
  if (it == j.end()) return;
  if (!it->is_number_integer() || it->get<int64_t>() != kConfigVersion) {
    errors->Add(absl::StrCat(Key(path, "config_version"), ": expected ",
                             kConfigVersion));
  }
}

}  // namespace

absl::Status JsonErrors::ToStatus() const {
  if (messages_.empty()) return absl::OkStatus();
  return absl::InvalidArgumentError(absl::StrJoin(messages_, "; "));
}

void CheckKeys(const Json& object, std::string_view path,
               const std::set<std::string, std::less<>>& allowed,
               JsonErrors* errors) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      errors->Add(absl::StrCat("unknown key '", Key(path, it.key()), "'"));
    }
  }
}

absl::StatusOr<DitherMode> ParseDitherMode(std::string_view name) {
  if (name == "sd") return DitherMode::kSubtractive;
  if (name == "nsd") return DitherMode::kNonSubtractive;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown dither mode '", std::string(name), "' (expected sd|nsd)"));
}

Json ContourToJson(const ContourTable& contour) {
  if (contour == DefaultContour()) return "default";
  Json points = Json::array();
  for (const ContourPoint& p : contour.points()) points.push_back({p.hz, p.db});
  return points;
}

absl::StatusOr<ContourTable> ContourFromJson(const Json& j,
                                             const JsonOptions& options) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "default" || name == kDefaultContourId) return DefaultContour();
    if (!options.allow_contour_files) {
      return absl::InvalidArgumentError(
          "contour must be \"default\" or a list of [hz, db] points");
    }
    return LoadContour(name);
  }
  if (!j.is_array()) {
    return absl::InvalidArgumentError(
        "contour must be \"default\", a file name or a list of [hz, db] "
        "points");
  }
  std::vector<ContourPoint> points;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      return absl::InvalidArgumentError(
          "contour points must be [hz, db] number pairs");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return ContourTable::Create(std::move(points));
}

Json ShapingToJson(const ShapingConfig& shaping) {
  return {
      {"contour", ContourToJson(shaping.contour)},
      {"order", shaping.order},
      {"iterations", shaping.iterations},
      {"redraw_dither", shaping.redraw_dither},
      {"relaxation", shaping.relaxation},
  };
}

void ShapingFromJson(const Json& j, std::string_view path,
                     const JsonOptions& options, ShapingConfig* out,
                     JsonErrors* errors) {
  if (!j.is_object()) {
    errors->Add(absl::StrCat(std::string(path), ": expected an object"));
    return;
  }
  CheckKeys(j, path,
            {"contour", "order", "iterations", "redraw_dither", "relaxation"},
            errors);
  if (auto it = j.find("contour"); it != j.end()) {
    auto contour = ContourFromJson(*it, options);
    if (contour.ok()) {
      out->contour = *std::move(contour);
    } else {
      errors->Add(
          absl::StrCat(Key(path, "contour"), ": ", contour.status().message()));
    }
  }
  GetInt(j, path, "order", 2, 2048, &out->order, errors);
  if (out->order % 2 != 0) {
    errors->Add(absl::StrCat(Key(path, "order"), ": must be even"));
  }
  GetInt(j, path, "iterations", 1, 100000, &out->iterations, errors);
  GetBool(j, path, "redraw_dither", &out->redraw_dither, errors);
  GetDouble(j, path, "relaxation", std::numeric_limits<double>::min(), 1.0,
            &out->relaxation, errors);
}

Json ProcessParamsToJson(const ProcessParams& params) {
  return {
      {"config_version", kConfigVersion},
      {"dither", DitherKindName(params.dither.kind)},
      {"alpha", params.dither.alpha},
      {"seed", params.dither.seed},
      {"tpdf_construction", TpdfConstructionName(params.dither.construction)},
      {"bits", params.quant.bits()},
      {"full_scale", params.quant.full_scale()},
      {"mode", DitherModeName(params.mode)},
      {"shaping", params.shaping.has_value() ? ShapingToJson(*params.shaping)
                                             : Json(nullptr)},
      {"fundamental_hz", params.fundamental_hz.has_value()
                             ? Json(*params.fundamental_hz)
                             : Json(nullptr)},
      {"normalize", params.normalize},
  };
}

absl::StatusOr<ProcessParams> ProcessParamsFromJson(
    const Json& j, const JsonOptions& options) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("parameters must be a JSON object");
  }
  JsonErrors errors;
  CheckKeys(
      j, "",
      {"config_version", "dither", "alpha", "seed", "tpdf_construction", "bits",
       "full_scale", "mode", "shaping", "fundamental_hz", "normalize"},
      &errors);
  CheckVersion(j, "", &errors);
  ProcessParams p;
  GetEnum(j, "", "dither", ParseDitherKind, &p.dither.kind, &errors);
  GetDouble(j, "", "alpha", 0.0, 1.0, &p.dither.alpha, &errors);
  GetSeed(j, "", &p.dither.seed, &errors);
  GetEnum(j, "", "tpdf_construction", ParseTpdfConstruction,
          &p.dither.construction, &errors);
  GetQuant(j, "", &p.quant, &errors);
  GetEnum(j, "", "mode", ParseDitherMode, &p.mode, &errors);
  if (auto it = j.find("shaping"); it != j.end() && !it->is_null()) {
    ShapingConfig shaping;
    if (it->is_string() && it->get<std::string>() == "default") {
      p.shaping = shaping;
    } else {
      ShapingFromJson(*it, "shaping", options, &shaping, &errors);
      p.shaping = std::move(shaping);
    }
  }
  GetOptionalFundamental(j, "", &p.fundamental_hz, &errors);
  GetBool(j, "", "normalize", &p.normalize, &errors);
  if (auto status = errors.ToStatus(); !status.ok()) return status;
  return p;
}

Json SweepConfigToJson(const SweepConfig& config) {
  Json conditions = Json::array();
  for (Condition c : config.conditions) conditions.push_back(ConditionName(c));
  return {
      {"config_version", kConfigVersion},
      {"alpha_count", config.alpha_count},
      {"shaped_alpha_count", config.shaped_alpha_count.has_value()
                                 ? Json(*config.shaped_alpha_count)
                                 : Json(nullptr)},
      {"conditions", conditions},
      {"bits", config.quant.bits()},
      {"full_scale", config.quant.full_scale()},
      {"mode", DitherModeName(config.mode)},
      {"lambda", config.lambda},
      {"seed", config.seed},
      {"rule", SelectionRuleName(config.rule)},
      {"knee_threshold", config.knee_threshold},
      {"fundamental_hz", config.fundamental_hz.has_value()
                             ? Json(*config.fundamental_hz)
                             : Json(nullptr)},
      {"tpdf_construction", TpdfConstructionName(config.construction)},
      {"shaping", ShapingToJson(config.shaping)},
  };
}

void SweepConfigFromJson(const Json& j, const JsonOptions& options,
                         SweepConfig* out, JsonErrors* errors) {
  CheckVersion(j, "", errors);
  GetInt(j, "", "alpha_count", 3, 1000000, &out->alpha_count, errors);
  if (auto it = j.find("shaped_alpha_count"); it != j.end()) {
    if (it->is_null()) {
      out->shaped_alpha_count.reset();
    } else {
      int n = 0;
      GetInt(j, "", "shaped_alpha_count", 3, 1000000, &n, errors);
      if (n > 0) out->shaped_alpha_count = n;
    }
  }
  if (auto it = j.find("conditions"); it != j.end()) {
    if (!it->is_array() || it->empty()) {
      errors->Add("conditions: expected a non-empty list of names");
    } else {
      out->conditions.clear();
      for (const Json& c : *it) {
        auto parsed =
            c.is_string()
                ? ParseCondition(c.get<std::string>())
                : absl::InvalidArgumentError("expected a condition name");
        if (parsed.ok()) {
          out->conditions.push_back(*parsed);
        } else {
          errors->Add(absl::StrCat("conditions: ", parsed.status().message()));
        }
      }
    }
  }
  GetQuant(j, "", &out->quant, errors);
  GetEnum(j, "", "mode", ParseDitherMode, &out->mode, errors);
  GetDouble(j, "", "lambda", 0.0, 1.0, &out->lambda, errors);
  GetSeed(j, "", &out->seed, errors);
  GetEnum(j, "", "rule", ParseSelectionRule, &out->rule, errors);
  GetDouble(j, "", "knee_threshold", std::numeric_limits<double>::min(), 1.0,
            &out->knee_threshold, errors);
  GetOptionalFundamental(j, "", &out->fundamental_hz, errors);
  GetEnum(j, "", "tpdf_construction", ParseTpdfConstruction, &out->construction,
          errors);
  if (auto it = j.find("shaping"); it != j.end() && !it->is_null()) {
    ShapingFromJson(*it, "shaping", options, &out->shaping, errors);
  }
}

absl::StatusOr<SweepConfig> SweepConfigFromJson(const Json& j,
                                                const JsonOptions& options) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("sweep config must be a JSON object");
  }
  JsonErrors errors;
  CheckKeys(j, "", SweepConfigKeys(), &errors);
  SweepConfig config;
  SweepConfigFromJson(j, options, &config, &errors);
  if (auto status = errors.ToStatus(); !status.ok()) return status;
  return config;
}

Json MetricRowToJson(const MetricRow& row) {
  return {
      {"alpha", row.alpha},
      {"entropy_bits", row.entropy_bits},
      {"cond_entropy_bits", row.cond_entropy_bits},
      {"mse", row.mse},
      {"coded_bits_per_symbol", row.coded_bits_per_symbol},
      {"pwsnr_proxy_db", row.pwsnr_db},
      {"spur_db", std::isnan(row.spur_db) ? Json(nullptr) : Json(row.spur_db)},
  };
}

Json SweepReportToJson(const SweepReport& report, bool include_rows) {
  Json optimal = Json::array();
  for (const OptimalAlpha& o : report.optimal) {
    optimal.push_back({
        {"condition", ConditionName(o.condition)},
        {"alpha", o.alpha},
        {"selection_rule", SelectionRuleName(o.rule)},
        {"score_at_optimum", o.score_at_optimum},
        {"improvement_over_npdf", o.improvement_over_npdf},
        {"objective", o.objective},
    });
  }
  Json points = Json::array();
  for (const ContourPoint& p : report.config.shaping.contour.points()) {
    points.push_back({p.hz, p.db});
  }
  Json out = {
      {"format", "ecdither.sweep_report"},
      {"format_version", 1},
      {"version", report.version},
      {"complete", report.complete},
      {"perceptual_metric",
       "pwsnr_proxy_db: contour-weighted SNR proxy, not a perceptual quality "
       "score"},
      {"config", SweepConfigToJson(report.config)},
      {"provenance",
       {{"contour_hash", report.contour_hash},
        {"contour_points", points},
        {"contour_is_default",
         report.config.shaping.contour == DefaultContour()},
        {"default_contour_id", kDefaultContourId}}},
      {"npdf_baseline", MetricRowToJson(report.npdf_baseline)},
      {"optimal", optimal},
      {"row_count", report.rows.size()},
  };
  if (include_rows) {
    Json rows = Json::array();
    for (const SweepRow& r : report.rows) {
      Json row = MetricRowToJson(r.metrics);
      row["condition"] = ConditionName(r.condition);
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
  }
  return out;
}

}  // namespace ecdither

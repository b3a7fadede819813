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

#ifndef ECDITHER_JSON_CONFIG_H_
#define ECDITHER_JSON_CONFIG_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ecdither/contour.h"
#include "ecdither/metric_row.h"
#include "ecdither/process.h"
#include "ecdither/shaper.h"
#include "ecdither/sweep.h"
#include "json.hpp"

namespace ecdither {

using Json = nlohmann::json;

// Version of the documented key set below. Documents may carry it as
// "config_version"; any other value is rejected.
inline constexpr int kConfigVersion = 1;

// Collects every problem in a document before failing, so one run reports
// all unknown keys and bad values at once.
class JsonErrors {
 public:
  void Add(std::string message) { messages_.push_back(std::move(message)); }
  bool empty() const { return messages_.empty(); }
  const std::vector<std::string>& messages() const { return messages_; }
  // InvalidArgument listing every message, or OK.
  absl::Status ToStatus() const;

 private:
  std::vector<std::string> messages_;
};

// Reports keys of `object` (at `path`) missing from `allowed`.
void CheckKeys(const Json& object, std::string_view path,
               const std::set<std::string, std::less<>>& allowed,
               JsonErrors* errors);

struct JsonOptions {
  // Allow "contour" to name a table file; otherwise only "default" or an
  // inline point list.
  bool allow_contour_files = false;
};

// Contour: "default", an array of [hz, db] pairs, or (with files allowed) a
// path.
Json ContourToJson(const ContourTable& contour);
absl::StatusOr<ContourTable> ContourFromJson(const Json& j,
                                             const JsonOptions& options = {});

// Shaping keys: contour, order, iterations, redraw_dither, relaxation.
Json ShapingToJson(const ShapingConfig& shaping);
void ShapingFromJson(const Json& j, std::string_view path,
                     const JsonOptions& options, ShapingConfig* out,
                     JsonErrors* errors);

// Process keys: dither, alpha, seed, bits, full_scale, mode,
// tpdf_construction, shaping (object or null), fundamental_hz (number or
// null), normalize.
Json ProcessParamsToJson(const ProcessParams& params);
absl::StatusOr<ProcessParams> ProcessParamsFromJson(
    const Json& j, const JsonOptions& options = {});

// Sweep keys: alpha_count, shaped_alpha_count, conditions, bits, full_scale,
// mode, lambda, seed, rule, knee_threshold, fundamental_hz,
// tpdf_construction, shaping. Keys in `extra_keys` are skipped here so
// callers can layer their own keys on the same object.
inline const std::set<std::string, std::less<>>& SweepConfigKeys() {
  static const auto* keys =
      new std::set<std::string, std::less<>>{"config_version",
                                             "alpha_count",
                                             "shaped_alpha_count",
                                             "conditions",
                                             "bits",
                                             "full_scale",
                                             "mode",
                                             "lambda",
                                             "seed",
                                             "rule",
                                             "knee_threshold",
                                             "fundamental_hz",
                                             "tpdf_construction",
                                             "shaping"};
  return *keys;
}
Json SweepConfigToJson(const SweepConfig& config);
void SweepConfigFromJson(const Json& j, const JsonOptions& options,
                         SweepConfig* out, JsonErrors* errors);
absl::StatusOr<SweepConfig> SweepConfigFromJson(
    const Json& j, const JsonOptions& options = {});

// MetricRow as a JSON object; a NaN spur_db becomes null.
Json MetricRowToJson(const MetricRow& row);

// Full report: provenance, baseline, optimal alphas and every row.
Json SweepReportToJson(const SweepReport& report, bool include_rows = true);

absl::StatusOr<DitherMode> ParseDitherMode(std::string_view name);

}  // namespace ecdither

#endif  // ECDITHER_JSON_CONFIG_H_

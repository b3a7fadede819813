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

#ifndef ECDITHER_TOOLS_RUN_CONFIG_H_
#define ECDITHER_TOOLS_RUN_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/json_config.h"
#include "ecdither/signal.h"
#include "ecdither/sweep.h"

namespace ecdither::cli {

enum class Preset { kLoudness, kPitch, kChord, kRhythm };

std::string_view PresetName(Preset p);

// A sweep run as read from a config file: every SweepConfig key plus
//   preset      "loudness" | "pitch" | "chord" | "rhythm"
//   inputs      WAV paths, relative to the config file
//   output_dir  relative to the config file; default "."
//   normalize   peak-normalize inputs (default true; loudness forces false)
//   svg         write charts (default true)
//   duration_s  length of generated fixtures (default 1)
struct RunConfig {
  SweepConfig sweep;
  std::optional<Preset> preset;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output_dir = ".";
  bool normalize = true;
  bool svg = true;
  double duration_s = 1.0;
};

// Every bad key and value is reported in one InvalidArgument.
absl::StatusOr<RunConfig> ParseRunConfig(const Json& j,
                                         const std::filesystem::path& base_dir);

// The resolved config, echoed by every run and stored in the sidecar.
Json RunConfigToJson(const RunConfig& config);

struct RunInput {
  // Prefix of the CSV file_id.
  std::string id;
  Signal signal;
  // Overrides the sweep's fundamental for generated tones.
  std::optional<double> fundamental_hz;
};

// Generates preset fixtures and reads input files, normalizing unless
// disabled. File errors keep the WAV reader's status codes.
absl::StatusOr<std::vector<RunInput>> ResolveInputs(const RunConfig& config);

}  // namespace ecdither::cli

#endif  // ECDITHER_TOOLS_RUN_CONFIG_H_

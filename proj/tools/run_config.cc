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

#include "run_config.h"

#include <map>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "ecdither/report.h"
#include "ecdither/wav.h"

namespace ecdither::cli {
namespace {

constexpr const char* kPitchNotes[] = {"C4",  "C#4", "D4", "D#4", "E4",
                                       "F4",  "F#4", "G4", "G#4", "A4",
                                       "A#4", "B4",  "C5"};
constexpr const char* kChordNotes[] = {"C4", "E4", "G4", "C5"};
// Level of generated fixtures other than the loudness series.
constexpr double kFixtureLevelDb = -10.0;

absl::StatusOr<Preset> ParsePreset(std::string_view name) {
  for (Preset p :
       {Preset::kLoudness, Preset::kPitch, Preset::kChord, Preset::kRhythm}) {
    if (PresetName(p) == name) return p;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown preset '", std::string(name),
                   "' (expected loudness|pitch|chord|rhythm)"));
}

absl::StatusOr<RunInput> Tone(std::string id, double hz, double db,
                              double duration_s) {
  auto s = GenerateSine(
      {.frequency_hz = hz, .duration_s = duration_s, .level_db = db});
  if (!s.ok()) return s.status();
  return RunInput{std::move(id), *std::move(s), hz};
}

}  // namespace

std::string_view PresetName(Preset p) {
  switch (p) {
    case Preset::kLoudness:
      return "loudness";
    case Preset::kPitch:
      return "pitch";
    case Preset::kChord:
      return "chord";
    case Preset::kRhythm:
      return "rhythm";
  }
  return "unknown";
}

absl::StatusOr<RunConfig> ParseRunConfig(
    const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  JsonErrors errors;
  std::set<std::string, std::less<>> allowed = SweepConfigKeys();
  allowed.insert(
      {"preset", "inputs", "output_dir", "normalize", "svg", "duration_s"});
  CheckKeys(j, "", allowed, &errors);

  RunConfig c;
  SweepConfigFromJson(j, JsonOptions{.allow_contour_files = true}, &c.sweep,
                      &errors);
  if (auto it = j.find("preset"); it != j.end() && !it->is_null()) {
    auto p = it->is_string() ? ParsePreset(it->get<std::string>())
                             : absl::InvalidArgumentError("expected a string");
    if (p.ok()) {
      c.preset = *p;
    } else {
      errors.Add(absl::StrCat("preset: ", p.status().message()));
    }
  }
  if (auto it = j.find("inputs"); it != j.end()) {
    if (!it->is_array()) {
      errors.Add("inputs: expected a list of paths");
    } else {
      for (const Json& p : *it) {
        if (!p.is_string() || p.get<std::string>().empty()) {
          errors.Add("inputs: expected non-empty path strings");
          continue;
        }
        c.inputs.push_back(base_dir / p.get<std::string>());
      }
    }
  }
  if (auto it = j.find("output_dir"); it != j.end()) {
    if (it->is_string() && !it->get<std::string>().empty()) {
      c.output_dir = it->get<std::string>();
    } else {
      errors.Add("output_dir: expected a non-empty path string");
    }
  }
  c.output_dir = base_dir / c.output_dir;
  for (auto [key, target] :
       {std::pair{"normalize", &c.normalize}, std::pair{"svg", &c.svg}}) {
    if (auto it = j.find(key); it != j.end()) {
      if (it->is_boolean()) {
        *target = it->get<bool>();
      } else {
        errors.Add(absl::StrCat(key, ": expected true or false"));
      }
    }
  }
  if (auto it = j.find("duration_s"); it != j.end()) {
    if (it->is_number() && it->get<double>() > 0.0 &&
        it->get<double>() <= 600.0) {
      c.duration_s = it->get<double>();
    } else {
      errors.Add("duration_s: expected a number in (0, 600]");
    }
  }

  const bool generated =
      c.preset == Preset::kLoudness || c.preset == Preset::kPitch;
  if (generated && !c.inputs.empty()) {
    errors.Add(absl::StrCat("inputs: not used by preset '",
                            std::string(PresetName(*c.preset)), "'"));
  }
  if ((!c.preset || c.preset == Preset::kRhythm) && c.inputs.empty()) {
    errors.Add(c.preset ? "inputs: preset 'rhythm' needs input files"
                        : "inputs: give input files or a preset");
  }
  // Loudness levels are the quantity under test.
  if (c.preset == Preset::kLoudness) c.normalize = false;
  if (auto status = ValidateSweepConfig(c.sweep); !status.ok()) {
    errors.Add(std::string(status.message()));
  }
  if (auto status = errors.ToStatus(); !status.ok()) return status;
  return c;
}

Json RunConfigToJson(const RunConfig& config) {
  Json j = SweepConfigToJson(config.sweep);
  j["preset"] =
      config.preset ? Json(std::string(PresetName(*config.preset))) : Json();
  Json inputs = Json::array();
  for (const auto& p : config.inputs) inputs.push_back(p.string());
  j["inputs"] = inputs;
  j["output_dir"] = config.output_dir.string();
  j["normalize"] = config.normalize;
  j["svg"] = config.svg;
  j["duration_s"] = config.duration_s;
  return j;
}

absl::StatusOr<std::vector<RunInput>> ResolveInputs(const RunConfig& config) {
  std::vector<RunInput> runs;
  auto add = [&](absl::StatusOr<RunInput> r) -> absl::Status {
    if (!r.ok()) return r.status();
    runs.push_back(*std::move(r));
    return absl::OkStatus();
  };
  if (config.preset == Preset::kLoudness) {
    const double c4 = *NoteFrequency("C4");
    for (int db = -25; db <= 0; db += 5) {
      auto s = add(
          Tone(absl::StrCat("loudness_", db, "db"), c4, db, config.duration_s));
      if (!s.ok()) return s;
    }
  } else if (config.preset == Preset::kPitch) {
    for (const char* note : kPitchNotes) {
      auto s = add(Tone(absl::StrCat("pitch_", note), *NoteFrequency(note),
                        kFixtureLevelDb, config.duration_s));
      if (!s.ok()) return s;
    }
  } else if (config.preset == Preset::kChord) {
    ChordSpec chord;
    chord.level_db = kFixtureLevelDb;
    for (const char* note : kChordNotes) {
      chord.tones.push_back({.frequency_hz = *NoteFrequency(note),
                             .duration_s = config.duration_s});
    }
    auto s = GenerateChord(chord);
    if (!s.ok()) return s.status();
    runs.push_back({"chord_sine", *std::move(s), std::nullopt});
  }

  std::map<std::string, int> seen;
  for (const auto& path : config.inputs) {
    auto s = ReadWav(path);
    if (!s.ok()) return s.status();
    std::string id = path.stem().string();
    if (const int n = ++seen[id]; n > 1) id = absl::StrCat(id, "_", n);
    runs.push_back({std::move(id), *std::move(s), std::nullopt});
  }

  if (config.normalize) {
    for (RunInput& r : runs) {
      auto n = NormalizePeak(r.signal);
      if (!n.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat(r.id, ": ", n.status().message()));
      }
      r.signal = *std::move(n);
    }
  }
  return runs;
}

}  // namespace ecdither::cli

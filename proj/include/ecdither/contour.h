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

#ifndef ECDITHER_CONTOUR_H_
#define ECDITHER_CONTOUR_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace ecdither {

struct ContourPoint {
  double hz = 0.0;
  double db = 0.0;

  bool operator==(const ContourPoint&) const = default;
};

// Frequency/gain table used both to design the shaping FIR and to weight
// error spectra. Frequencies are strictly increasing and non-negative.
class ContourTable {
 public:
  static absl::StatusOr<ContourTable> Create(std::vector<ContourPoint> points);

  // A flat table at `db` over all frequencies.
  static ContourTable Flat(double db);

  const std::vector<ContourPoint>& points() const { return points_; }

  // Endpoint extension: adds a 0 Hz point carrying the first gain and a
  // Nyquist point carrying the (interpolated) gain there; points above
  // Nyquist are dropped.
  ContourTable ExtendedTo(double nyquist_hz) const;

  // Linear interpolation in dB, held constant beyond the ends.
  double GainDb(double hz) const;

  bool operator==(const ContourTable&) const = default;

 private:
  explicit ContourTable(std::vector<ContourPoint> points)
      : points_(std::move(points)) {}

  std::vector<ContourPoint> points_;
};

// Plain text, two whitespace-separated columns (Hz, dB), '#' starts a
// comment.
absl::StatusOr<ContourTable> ParseContour(std::string_view text);
absl::StatusOr<ContourTable> LoadContour(const std::filesystem::path& path);
std::string FormatContour(const ContourTable& table);

// The shipped default table (data/contour_60phon_v1.txt) and its source text.
const ContourTable& DefaultContour();
std::string_view DefaultContourText();
inline constexpr std::string_view kDefaultContourId = "contour_60phon_v1";

// FNV-1a 64 over FormatContour(table), as 16 hex digits.
std::string ContourHash(const ContourTable& table);

}  // namespace ecdither

#endif  // ECDITHER_CONTOUR_H_

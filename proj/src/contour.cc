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

#include "ecdither/contour.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace ecdither {

// Generated from data/contour_60phon_v1.txt at build time.
extern const char kDefaultContourData[];

absl::StatusOr<ContourTable> ContourTable::Create(
    std::vector<ContourPoint> points) {
  if (points.empty()) return absl::InvalidArgumentError("empty contour table");
  for (size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].hz) || !std::isfinite(points[i].db)) {
      return absl::InvalidArgumentError(
          absl::StrCat("non-finite contour point at row ", i));
    }
    if (points[i].hz < 0.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("negative frequency at row ", i));
    }
    if (i > 0 && !(points[i].hz > points[i - 1].hz)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "contour frequencies must be strictly increasing (row ", i, ": ",
          points[i].hz, " Hz after ", points[i - 1].hz, " Hz)"));
    }
  }
  return ContourTable(std::move(points));
}

ContourTable ContourTable::Flat(double db) { return ContourTable({{0.0, db}}); }

double ContourTable::GainDb(double hz) const {
  if (hz <= points_.front().hz) return points_.front().db;
  if (hz >= points_.back().hz) return points_.back().db;
  size_t hi = 1;
  while (points_[hi].hz < hz) ++hi;
  const ContourPoint& a = points_[hi - 1];
  const ContourPoint& b = points_[hi];
  const double t = (hz - a.hz) / (b.hz - a.hz);
  return a.db + t * (b.db - a.db);
}

ContourTable ContourTable::ExtendedTo(double nyquist_hz) const {
  std::vector<ContourPoint> out;
  if (points_.front().hz > 0.0) out.push_back({0.0, points_.front().db});
  for (const ContourPoint& p : points_) {
    if (p.hz < nyquist_hz) out.push_back(p);
  }
  out.push_back({nyquist_hz, GainDb(nyquist_hz)});
  return ContourTable(std::move(out));
}

absl::StatusOr<ContourTable> ParseContour(std::string_view text) {
  std::vector<ContourPoint> points;
  int line_number = 0;
  // absl::string_view is distinct from std::string_view in this abseil build.
  for (absl::string_view line :
       absl::StrSplit(absl::string_view(text.data(), text.size()), '\n')) {
    ++line_number;
    if (size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r,"), absl::SkipEmpty());
    if (fields.empty()) continue;
    ContourPoint p;
    if (fields.size() != 2 || !absl::SimpleAtod(fields[0], &p.hz) ||
        !absl::SimpleAtod(fields[1], &p.db)) {
      return absl::InvalidArgumentError(
          absl::StrCat("contour line ", line_number, ": expected '<hz> <db>'"));
    }
    points.push_back(p);
  }
  return ContourTable::Create(std::move(points));
}

absl::StatusOr<ContourTable> LoadContour(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseContour(buffer.str());
}

std::string FormatContour(const ContourTable& table) {
  std::string out;
  char line[64];
  for (const ContourPoint& p : table.points()) {
    std::snprintf(line, sizeof(line), "%.9g %.9g\n", p.hz, p.db);
    out += line;
  }
  return out;
}

std::string_view DefaultContourText() { return kDefaultContourData; }

const ContourTable& DefaultContour() {
  static const ContourTable* table = [] {
    auto parsed = ParseContour(kDefaultContourData);
    // The data file is compiled in; a parse failure is a build defect.
    if (!parsed.ok()) std::abort();
    return new ContourTable(*std::move(parsed));
  }();
  return *table;
}

std::string ContourHash(const ContourTable& table) {
  uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : FormatContour(table)) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace ecdither

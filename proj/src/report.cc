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

#include "ecdither/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace ecdither {
namespace {

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  for (absl::string_view f :
       absl::StrSplit(absl::string_view(line.data(), line.size()), ',')) {
    out.emplace_back(f.data(), f.size());
  }
  return out;
}

absl::Status LineError(size_t line, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", what));
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

absl::StatusOr<double> ParseNumber(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("not a number: '", std::string(text), "'"));
  }
  return v;
}

std::vector<CsvRow> ReportCsvRows(const SweepReport& report,
                                  std::string_view input_id) {
  // Keeps the id a single CSV field.
  std::string id(input_id);
  std::replace_if(
      id.begin(), id.end(),
      [](char c) { return c == ',' || c == '\n' || c == '\r' || c == '"'; },
      '_');
  std::vector<CsvRow> rows;
  rows.reserve(report.rows.size());
  for (const SweepRow& r : report.rows) {
    rows.push_back(
        {absl::StrCat(id, ".", std::string(ConditionName(r.condition))),
         r.condition, r.metrics});
  }
  return rows;
}

std::string SweepCsv(std::span<const CsvRow> rows) {
  std::string out = absl::StrCat(std::string(kSweepCsvHeader), "\n");
  for (const CsvRow& r : rows) {
    const MetricRow& m = r.metrics;
    absl::StrAppend(
        &out, r.file_id, ",", std::string(ConditionName(r.condition)), ",",
        FormatNumber(m.alpha), ",", FormatNumber(m.entropy_bits), ",",
        FormatNumber(m.cond_entropy_bits), ",", FormatNumber(m.mse), ",",
        FormatNumber(m.coded_bits_per_symbol), ",", FormatNumber(m.pwsnr_db),
        ",", FormatNumber(m.spur_db), "\n");
  }
  return out;
}

absl::StatusOr<std::vector<CsvRow>> ParseSweepCsv(std::string_view text) {
  const std::vector<std::string_view> lines = Lines(text);
  if (lines.empty() || lines[0] != kSweepCsvHeader) {
    return absl::InvalidArgumentError(
        absl::StrCat("sweep CSV must start with header '",
                     std::string(kSweepCsvHeader), "'"));
  }
  std::vector<CsvRow> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string_view> f = Fields(lines[i]);
    if (f.size() != 9) return LineError(i + 1, "expected 9 fields");
    CsvRow row;
    row.file_id = std::string(f[0]);
    auto condition = ParseCondition(f[1]);
    if (!condition.ok()) return LineError(i + 1, condition.status().message());
    row.condition = *condition;
    double* targets[] = {&row.metrics.alpha,
                         &row.metrics.entropy_bits,
                         &row.metrics.cond_entropy_bits,
                         &row.metrics.mse,
                         &row.metrics.coded_bits_per_symbol,
                         &row.metrics.pwsnr_db,
                         &row.metrics.spur_db};
    for (size_t k = 0; k < 7; ++k) {
      auto v = ParseNumber(f[k + 2]);
      if (!v.ok()) return LineError(i + 1, v.status().message());
      *targets[k] = *v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

absl::StatusOr<std::vector<ExternalScore>> ParseExternalScores(
    std::string_view text) {
  const std::vector<std::string_view> lines = Lines(text);
  if (lines.empty() || lines[0] != kExternalScoresHeader) {
    return absl::InvalidArgumentError(
        absl::StrCat("scores CSV must start with header '",
                     std::string(kExternalScoresHeader), "'"));
  }
  std::vector<ExternalScore> scores;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string_view> f = Fields(lines[i]);
    if (f.size() != 4) return LineError(i + 1, "expected 4 fields");
    if (f[0].empty() || f[2].empty()) {
      return LineError(i + 1, "empty file_id or metric_name");
    }
    auto alpha = ParseNumber(f[1]);
    if (!alpha.ok()) return LineError(i + 1, alpha.status().message());
    auto score = ParseNumber(f[3]);
    if (!score.ok()) return LineError(i + 1, score.status().message());
    scores.push_back({std::string(f[0]), *alpha, std::string(f[2]), *score});
  }
  return scores;
}

absl::StatusOr<JoinedCsv> JoinExternalScores(
    std::span<const CsvRow> rows, std::span<const ExternalScore> scores) {
  using Key = std::pair<std::string, double>;
  std::set<std::string> metrics;
  std::map<std::tuple<std::string, double, std::string>, double> by_key;
  for (const ExternalScore& s : scores) {
    metrics.insert(s.metric_name);
    if (!by_key
             .emplace(std::make_tuple(s.file_id, s.alpha, s.metric_name),
                      s.score)
             .second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate score for ", s.file_id, " alpha ",
                       FormatNumber(s.alpha), " ", s.metric_name));
    }
  }
  std::set<Key> row_keys;
  for (const CsvRow& r : rows) row_keys.insert({r.file_id, r.metrics.alpha});

  JoinedCsv out;
  for (const ExternalScore& s : scores) {
    if (row_keys.count({s.file_id, s.alpha}) == 0) ++out.unmatched;
  }

  const std::string base = SweepCsv(rows);
  const std::vector<std::string_view> lines = Lines(base);
  out.csv = std::string(lines[0]);
  for (const std::string& m : metrics) absl::StrAppend(&out.csv, ",", m);
  out.csv += "\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out.csv += std::string(lines[i + 1]);
    for (const std::string& m : metrics) {
      out.csv += ",";
      auto it = by_key.find(
          std::make_tuple(rows[i].file_id, rows[i].metrics.alpha, m));
      if (it != by_key.end()) out.csv += FormatNumber(it->second);
    }
    out.csv += "\n";
  }
  return out;
}

std::string SweepSvg(std::span<const CsvRow> rows, Chart chart) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 60, kRight = 180, kTop = 30, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd", "#ff7f0e", "#17becf",
                                            "#8c564b", "#e377c2"};

  // Series in first-appearance order.
  std::vector<std::string> ids;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const CsvRow& r : rows) {
    auto [it, inserted] = series.try_emplace(r.file_id);
    if (inserted) ids.push_back(r.file_id);
    const double y =
        chart == Chart::kEntropy ? r.metrics.entropy_bits : r.metrics.pwsnr_db;
    it->second.emplace_back(r.metrics.alpha, y);
  }
  if (chart == Chart::kPerceptual) {
    for (auto& [id, points] : series) {
      std::vector<MetricRow> m(points.size());
      for (size_t i = 0; i < points.size(); ++i)
        m[i].pwsnr_db = points[i].second;
      const std::vector<double> p = NormalizedPerceptual(m);
      for (size_t i = 0; i < points.size(); ++i) points[i].second = p[i];
    }
  }
  double lo = 0.0, hi = 1.0;
  if (chart == Chart::kEntropy) {
    for (const auto& [id, points] : series) {
      for (const auto& [x, y] : points) hi = std::max(hi, y);
    }
    hi = std::ceil(hi);
  }
  auto px = [&](double a) { return kLeft + a * plot_w; };
  auto py = [&](double v) { return kTop + (hi - v) / (hi - lo) * plot_h; };

  const std::string title = chart == Chart::kEntropy
                                ? "Entropy vs alpha"
                                : "Normalized PWSNR proxy vs alpha";
  const std::string y_label =
      chart == Chart::kEntropy ? "entropy (bits)" : "normalized pwsnr proxy";
  std::string s =
      absl::StrCat("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"", kWidth,
                   "\" height=\"", kHeight, "\" viewBox=\"0 0 ", kWidth, " ",
                   kHeight, "\" font-family=\"sans-serif\" font-size=\"12\">\n",
                   "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
                   "<text x=\"", Fixed(kLeft + plot_w / 2),
                   "\" y=\"18\" "
                   "text-anchor=\"middle\">",
                   title, "</text>\n", "<rect x=\"", Fixed(kLeft), "\" y=\"",
                   Fixed(kTop), "\" width=\"", Fixed(plot_w), "\" height=\"",
                   Fixed(plot_h), "\" fill=\"none\" stroke=\"black\"/>\n");
  for (int t = 0; t <= 4; ++t) {
    const double a = t / 4.0;
    const double v = lo + (hi - lo) * t / 4.0;
    absl::StrAppend(&s, "<text x=\"", Fixed(px(a)), "\" y=\"",
                    Fixed(kTop + plot_h + 16), "\" text-anchor=\"middle\">",
                    Fixed(a), "</text>\n", "<text x=\"", Fixed(kLeft - 6),
                    "\" y=\"", Fixed(py(v) + 4), "\" text-anchor=\"end\">",
                    Fixed(v), "</text>\n");
  }
  absl::StrAppend(
      &s, "<text x=\"", Fixed(kLeft + plot_w / 2), "\" y=\"",
      Fixed(kHeight - 10), "\" text-anchor=\"middle\">alpha</text>\n",
      "<text transform=\"translate(16 ", Fixed(kTop + plot_h / 2),
      ") rotate(-90)\" text-anchor=\"middle\">", y_label, "</text>\n");
  for (size_t k = 0; k < ids.size(); ++k) {
    auto points = series[ids[k]];
    std::stable_sort(
        points.begin(), points.end(),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    const char* color = kColors[k % std::size(kColors)];
    std::vector<std::string> coords;
    for (const auto& [x, y] : points) {
      if (std::isfinite(y))
        coords.push_back(absl::StrCat(Fixed(px(x)), ",", Fixed(py(y))));
    }
    absl::StrAppend(&s, "<polyline fill=\"none\" stroke=\"", color,
                    "\" stroke-width=\"1.5\" points=\"",
                    absl::StrJoin(coords, " "), "\"/>\n");
    const double ly = kTop + 10 + 18 * static_cast<double>(k);
    absl::StrAppend(&s, "<line x1=\"", Fixed(kLeft + plot_w + 10), "\" y1=\"",
                    Fixed(ly), "\" x2=\"", Fixed(kLeft + plot_w + 30),
                    "\" y2=\"", Fixed(ly), "\" stroke=\"", color,
                    "\" stroke-width=\"2\"/>\n", "<text x=\"",
                    Fixed(kLeft + plot_w + 35), "\" y=\"", Fixed(ly + 4), "\">",
                    XmlEscape(ids[k]), "</text>\n");
  }
  s += "</svg>\n";
  return s;
}

}  // namespace ecdither
